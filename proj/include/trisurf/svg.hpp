#pragma once

#include <string>
#include <vector>

#include "trisurf/curves.hpp"
#include "trisurf/graph.hpp"
#include "trisurf/hyperbolic.hpp"
#include "trisurf/metrics.hpp"

namespace trisurf {

/// Placed triangles in the disk model: geodesic sides, tick marks, triangle
/// labels, and dashed links between paired (non-tree) sides.
std::string render_polygon_svg(const RotationGraph& g, const FundamentalPolygon& p);

struct PlotSeries {
  std::string label;
  std::vector<double> x, y;
};

/// Line plot with shared axes; points outside [y_min, y_max] are clipped.
std::string render_plot_svg(const std::string& title, const std::vector<PlotSeries>& series, double y_min,
                            double y_max);

/// u and curvature of a radial profile on (0, 1).
std::string render_profile_svg(const std::string& title, const RadialProfile& p);

/// Half-plane view (two periods) next to the punctured-disk view.
std::string render_curve_svg(const std::string& title, const CuspCurve& c);

}  // namespace trisurf
