#pragma once

#include <random>
#include <string>
#include <vector>

#include "trisurf/generators.hpp"
#include "trisurf/hyperbolic.hpp"
#include "trisurf/metrics.hpp"

namespace trisurf::testing {

struct Golden {
  std::string name;
  RotationGraph graph;
  std::vector<std::size_t> lengths;  // sorted
  int genus;
};

/// The eight worked examples and the gamma-k graphs for k in {2, 3, 4, 5, 7}.
std::vector<Golden> golden_graphs();

RotationGraph theta(bool flipped);
RotationGraph tetrahedron(std::set<VertexId> flips = {});
RotationGraph cube(std::set<VertexId> flips = {});

/// Uniform random dart pairing and vertex orientations on n vertices (n even),
/// retried until connected.
RotationGraph random_graph(std::mt19937_64& rng, VertexId n);

/// Same graph with dart ids permuted: new id of d is perm[d].
RotationGraph relabel(const RotationGraph& g, const std::vector<DartId>& perm);

/// Random shifts in [-scale, scale], projected so every path sum vanishes.
TickShifts zero_sum_shifts(const RotationGraph& g, std::mt19937_64& rng, double scale);

std::vector<std::size_t> sorted_lengths(const RotationGraph& g);

/// Area of {|z| < r} under the punctured-disk metric, integrating
/// lambda^2 rho over angle and radius.
double dstar_area_by_quadrature(double r);

/// Curvature from 5-point central differences of u. The stencil evaluates the
/// piece containing r, so it never straddles a join.
double fd_curvature(const RadialProfile& p, double r, double h = 1e-4);

/// Largest |fd_curvature - radial_curvature| over r = 0.05, 0.051, ..., 0.95.
double max_fd_error(const RadialProfile& p);

}  // namespace trisurf::testing
