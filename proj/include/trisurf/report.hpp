#pragma once

#include "trisurf/angles.hpp"
#include "trisurf/curves.hpp"
#include "trisurf/hyperbolic.hpp"
#include "trisurf/io.hpp"
#include "trisurf/metrics.hpp"
#include "trisurf/symmetry.hpp"

namespace trisurf {

Json symmetry_to_json(const RotationGraph& g, const SymmetryGroup& group);
Json system_to_json(const LinearSystem& sys);
Json solution_to_json(const AngleSolution& sol);
Json mobius_to_json(const Mobius& m);  // [a, b, c, d], det 1
Json polygon_to_json(const RotationGraph& g, const FundamentalPolygon& p);

/// Full pipeline on one graph: paths, genus, symmetries, angle system (flat
/// when genus 1), polygon parabolicity and cusp sizes.
Json analyze(const RotationGraph& g);

Json curvature_to_json(const CurvatureReport& rep, bool include_samples = false);
Json extension_to_json(const ExtensionCertificate& cert, const RadialProfile& p);
Json control_to_json(const ControlProfile& c);
Json comparison_to_json(const ComparisonResult& r);
Json curve_to_json(const CuspCurve& c);
Json slit_to_json(const SlitHorocycle& s);
Json convex_to_json(const ConvexCounterexample& c);
Json noextend_to_json(const GeodesicHorocycle& g);

}  // namespace trisurf
