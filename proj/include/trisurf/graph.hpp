#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "trisurf/errors.hpp"

namespace trisurf {

using DartId = std::int32_t;
using VertexId = std::int32_t;

struct Dart {
  DartId id;
  VertexId vertex;
};

// Raw dart/rotation arrays as read from disk; may violate any invariant.
struct GraphData {
  VertexId vertex_count = 0;
  std::vector<DartId> twin;
  std::vector<DartId> rotation;  // rotation[d]: next dart counterclockwise at d's vertex
  std::vector<VertexId> dart_vertex;
};

struct Violation {
  std::string rule;
  std::vector<std::int64_t> ids;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Checks every structural rule and reports all violations.
///
/// Rules: "array-sizes", "dart-count", "vertex-range", "twin-range",
/// "twin-involution", "rotation-permutation", "rotation-3-cycles",
/// "rotation-vertex", "vertex-degree", "connected".
ValidationReport validate(const GraphData& data);

class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

// A cyclic left-hand-turn dart sequence. Starts at its minimal dart.
struct LhtPath {
  std::vector<DartId> darts;
  std::size_t length() const { return darts.size(); }
  DartId min_dart() const { return darts.front(); }
  friend bool operator==(const LhtPath&, const LhtPath&) = default;
};

/// A 3-regular graph with an orientation at each vertex.
///
/// Immutable. Left-hand-turn paths are traced once at construction.
/// Successor rule: succ(d) = rotation(twin(d)).
class RotationGraph {
 public:
  /// Throws ValidationError when `data` breaks an invariant.
  explicit RotationGraph(GraphData data);

  VertexId vertex_count() const { return data_.vertex_count; }
  std::int32_t dart_count() const { return static_cast<std::int32_t>(data_.twin.size()); }
  std::int32_t edge_count() const { return dart_count() / 2; }

  DartId twin(DartId d) const { return data_.twin[d]; }
  DartId rotation(DartId d) const { return data_.rotation[d]; }
  DartId rotation_inverse(DartId d) const { return rotation_inv_[d]; }
  DartId successor(DartId d) const { return data_.rotation[data_.twin[d]]; }
  VertexId vertex_of(DartId d) const { return data_.dart_vertex[d]; }
  Dart dart(DartId d) const { return {d, vertex_of(d)}; }

  // Darts at v in rotation order, starting from the smallest id.
  const std::array<DartId, 3>& darts_at(VertexId v) const { return star_[v]; }
  // Index of d within darts_at(vertex_of(d)).
  int position(DartId d) const { return position_[d]; }

  const std::vector<LhtPath>& lht_paths() const { return paths_; }
  // Index into lht_paths() of the path containing d.
  std::size_t path_of(DartId d) const { return path_index_[d]; }

  const GraphData& data() const { return data_; }

  /// Same graph with every vertex rotation reversed (mirror embedding).
  RotationGraph mirrored() const;

 private:
  GraphData data_;
  std::vector<DartId> rotation_inv_;
  std::vector<std::array<DartId, 3>> star_;
  std::vector<int> position_;
  std::vector<LhtPath> paths_;
  std::vector<std::size_t> path_index_;
};

const std::vector<LhtPath>& trace_lht_paths(const RotationGraph& g);

/// chi = N_lht - N_v / 2
int euler_characteristic(const RotationGraph& g);

/// g = 1 + (N_v - 2 N_lht) / 4. Throws InternalError if that is not a
/// non-negative integer.
int genus(const RotationGraph& g);

std::vector<std::size_t> path_lengths(const RotationGraph& g);

}  // namespace trisurf
