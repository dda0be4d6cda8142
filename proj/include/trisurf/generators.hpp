#pragma once

#include <set>
#include <string>

#include "trisurf/graph.hpp"

namespace trisurf {

enum class BaseGraph { theta, tetrahedron, cube };

BaseGraph parse_base_graph(const std::string& name);  // throws std::invalid_argument
const char* to_string(BaseGraph b);

struct FlipPattern {
  BaseGraph base = BaseGraph::theta;
  std::set<VertexId> flipped_vertices;
};

/// Base graph with the rotation induced by the outward orientation of its
/// surface, then reversed at each flipped vertex.
///
/// Cube vertices are labelled by the bits xyz of their coordinates, so v and
/// 7 - v are opposite.
RotationGraph named_graph(const FlipPattern& p);

/// Reverses the rotation 3-cycle at each listed vertex.
GraphData flip_vertices(GraphData data, const std::set<VertexId>& vertices);

/// The graph of PSL(2, Z/k): darts are group elements, rotation is left
/// multiplication by R = (0 1; -1 1) and twin by S = (0 -1; 1 0). All paths
/// have length k. Throws std::domain_error for k < 2 or k > max_k.
RotationGraph platonic_graph(int k, int max_k = 13);

}  // namespace trisurf
