#pragma once

#include <optional>
#include <vector>

#include "trisurf/graph.hpp"

namespace trisurf {

struct Flag {
  VertexId vertex;
  DartId dart;
};

enum class Orientation { preserving, reversing };

/// A graph symmetry as a dart bijection. Commutes with twin; conjugates
/// rotation to rotation (preserving) or to its inverse (reversing).
struct GraphMap {
  std::vector<DartId> dart_image;
  Orientation sign = Orientation::preserving;

  DartId operator()(DartId d) const { return dart_image[d]; }
  bool is_identity() const;
  /// Smallest k > 0 with this^k = identity.
  int order() const;
  friend bool operator==(const GraphMap&, const GraphMap&) = default;
};

/// (a * b)(d) = a(b(d))
GraphMap compose(const GraphMap& a, const GraphMap& b);
GraphMap inverse(const GraphMap& m);
GraphMap identity_map(const RotationGraph& g);

/// Checks the twin and (sign-twisted) rotation laws; source and target graph
/// may differ.
bool is_graph_map(const RotationGraph& from, const RotationGraph& to, const GraphMap& m);

/// Propagates dart(source) -> dart(target) along twin and rotation. There is
/// at most one such map; returns nothing when propagation hits a conflict.
std::optional<GraphMap> extend_map(const RotationGraph& g, Flag source, Flag target, Orientation sign);

/// Same propagation between two graphs (isomorphism test).
std::optional<GraphMap> extend_map(const RotationGraph& from, const RotationGraph& to, Flag source, Flag target,
                                   Orientation sign);

/// Any isomorphism from `from` to `to` with the given sign.
std::optional<GraphMap> find_isomorphism(const RotationGraph& from, const RotationGraph& to, Orientation sign);

struct SymmetryGroup {
  std::vector<GraphMap> elements;  // identity first
  int order = 0;
  int preserving_order = 0;
};

/// All automorphisms and anti-automorphisms, found by extending one fixed
/// source flag to every (target, sign). Throws InternalError if the result is
/// not closed under composition and inverse.
SymmetryGroup symmetry_group(const RotationGraph& g);

/// A small generating set, picked greedily in element order.
std::vector<GraphMap> generators(const SymmetryGroup& group);

/// Image of corner d (the corner between rotation^-1(d) and d) under m.
/// Reversing maps swap the two sides of a corner, hence the extra rotation.
DartId corner_image(const RotationGraph& g, const GraphMap& m, DartId corner);

/// Orbits of the group on triangle corners. Each block sorted; blocks ordered
/// by their smallest corner.
std::vector<std::vector<DartId>> corner_orbits(const RotationGraph& g, const SymmetryGroup& group);

}  // namespace trisurf
