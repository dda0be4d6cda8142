#include "trisurf/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace trisurf {

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    const auto& v = violations[i];
    if (i) out << "; ";
    out << v.rule << " [";
    for (std::size_t k = 0; k < v.ids.size() && k < 8; ++k) out << (k ? "," : "") << v.ids[k];
    if (v.ids.size() > 8) out << ",...";
    out << "]";
  }
  return out.str();
}

ValidationError::ValidationError(ValidationReport report)
    : std::invalid_argument("invalid rotation graph: " + report.summary()),
      report_(std::move(report)) {}

namespace {

bool in_range(std::int64_t x, std::int64_t n) { return x >= 0 && x < n; }

}  // namespace

ValidationReport validate(const GraphData& g) {
  ValidationReport report;
  auto add = [&](const char* rule, std::vector<std::int64_t> ids) {
    report.violations.push_back({rule, std::move(ids)});
  };

  const auto n = static_cast<std::int64_t>(g.twin.size());
  if (g.rotation.size() != g.twin.size() || g.dart_vertex.size() != g.twin.size()) {
    add("array-sizes", {static_cast<std::int64_t>(g.twin.size()),
                        static_cast<std::int64_t>(g.rotation.size()),
                        static_cast<std::int64_t>(g.dart_vertex.size())});
    return report;  // nothing else is meaningful
  }
  if (g.vertex_count < 0 || n != 3 * static_cast<std::int64_t>(g.vertex_count)) {
    add("dart-count", {n, g.vertex_count});
  }

  std::vector<std::int64_t> bad;
  for (std::int64_t d = 0; d < n; ++d)
    if (!in_range(g.dart_vertex[d], g.vertex_count)) bad.push_back(d);
  if (!bad.empty()) add("vertex-range", std::move(bad));

  bad.clear();
  std::vector<std::int64_t> not_involution;
  for (std::int64_t d = 0; d < n; ++d) {
    if (!in_range(g.twin[d], n)) {
      bad.push_back(d);
    } else if (g.twin[d] == d || g.twin[g.twin[d]] != d) {
      not_involution.push_back(d);
    }
  }
  const bool twin_ok = bad.empty() && not_involution.empty();
  if (!bad.empty()) add("twin-range", std::move(bad));
  if (!not_involution.empty()) add("twin-involution", std::move(not_involution));

  bad.clear();
  std::vector<int> hits(n, 0);
  for (std::int64_t d = 0; d < n; ++d) {
    if (!in_range(g.rotation[d], n)) {
      bad.push_back(d);
    } else {
      ++hits[g.rotation[d]];
    }
  }
  for (std::int64_t d = 0; d < n; ++d)
    if (hits[d] != 1 && std::find(bad.begin(), bad.end(), d) == bad.end()) bad.push_back(d);
  const bool rotation_ok = bad.empty();
  if (!bad.empty()) add("rotation-permutation", std::move(bad));

  bool vertices_ok = true;
  if (rotation_ok) {
    std::vector<std::int64_t> short_cycles;
    std::vector<std::int64_t> mixed;
    std::vector<bool> seen(n, false);
    for (std::int64_t d = 0; d < n; ++d) {
      if (seen[d]) continue;
      std::vector<std::int64_t> cycle;
      for (std::int64_t x = d; !seen[x]; x = g.rotation[x]) {
        seen[x] = true;
        cycle.push_back(x);
      }
      if (cycle.size() != 3) short_cycles.insert(short_cycles.end(), cycle.begin(), cycle.end());
      for (auto x : cycle) {
        if (g.dart_vertex[x] != g.dart_vertex[d]) {
          mixed.insert(mixed.end(), cycle.begin(), cycle.end());
          break;
        }
      }
    }
    vertices_ok = short_cycles.empty() && mixed.empty();
    if (!short_cycles.empty()) add("rotation-3-cycles", std::move(short_cycles));
    if (!mixed.empty()) add("rotation-vertex", std::move(mixed));
  }

  if (g.vertex_count > 0) {
    std::vector<int> degree(g.vertex_count, 0);
    for (std::int64_t d = 0; d < n; ++d)
      if (in_range(g.dart_vertex[d], g.vertex_count)) ++degree[g.dart_vertex[d]];
    bad.clear();
    for (VertexId v = 0; v < g.vertex_count; ++v)
      if (degree[v] != 3) bad.push_back(v);
    if (!bad.empty()) {
      vertices_ok = false;
      add("vertex-degree", std::move(bad));
    }
  }

  if (twin_ok && vertices_ok && g.vertex_count > 0 && report.ok()) {
    std::vector<bool> reached(g.vertex_count, false);
    std::vector<std::vector<DartId>> star(g.vertex_count);
    for (DartId d = 0; d < n; ++d) star[g.dart_vertex[d]].push_back(d);
    std::queue<VertexId> queue;
    queue.push(0);
    reached[0] = true;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop();
      for (DartId d : star[v]) {
        const VertexId w = g.dart_vertex[g.twin[d]];
        if (!reached[w]) {
          reached[w] = true;
          queue.push(w);
        }
      }
    }
    bad.clear();
    for (VertexId v = 0; v < g.vertex_count; ++v)
      if (!reached[v]) bad.push_back(v);
    if (!bad.empty()) add("connected", std::move(bad));
  }
  if (g.vertex_count == 0 && n == 0) add("dart-count", {0, 0});
  return report;
}

RotationGraph::RotationGraph(GraphData data) : data_(std::move(data)) {
  if (auto report = validate(data_); !report.ok()) throw ValidationError(std::move(report));

  const DartId n = dart_count();
  rotation_inv_.resize(n);
  for (DartId d = 0; d < n; ++d) rotation_inv_[data_.rotation[d]] = d;

  star_.resize(data_.vertex_count);
  position_.resize(n);
  std::vector<DartId> smallest(data_.vertex_count, n);
  for (DartId d = 0; d < n; ++d) smallest[vertex_of(d)] = std::min(smallest[vertex_of(d)], d);
  for (VertexId v = 0; v < data_.vertex_count; ++v) {
    DartId d = smallest[v];
    for (int p = 0; p < 3; ++p, d = rotation(d)) {
      star_[v][p] = d;
      position_[d] = p;
    }
  }

  // Orbits of succ, visited in increasing dart order, so each orbit begins
  // at its smallest dart.
  path_index_.assign(n, 0);
  std::vector<bool> seen(n, false);
  for (DartId d = 0; d < n; ++d) {
    if (seen[d]) continue;
    LhtPath path;
    for (DartId x = d; !seen[x]; x = successor(x)) {
      seen[x] = true;
      path.darts.push_back(x);
    }
    paths_.push_back(std::move(path));
  }
  std::stable_sort(paths_.begin(), paths_.end(), [](const LhtPath& a, const LhtPath& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.min_dart() < b.min_dart();
  });
  for (std::size_t i = 0; i < paths_.size(); ++i)
    for (DartId d : paths_[i].darts) path_index_[d] = i;
}

RotationGraph RotationGraph::mirrored() const {
  GraphData mirror = data_;
  mirror.rotation = rotation_inv_;
  return RotationGraph(std::move(mirror));
}

const std::vector<LhtPath>& trace_lht_paths(const RotationGraph& g) { return g.lht_paths(); }

int euler_characteristic(const RotationGraph& g) {
  const int n_lht = static_cast<int>(g.lht_paths().size());
  if (g.vertex_count() % 2 != 0) throw InternalError("odd vertex count in a 3-regular graph");
  return n_lht - g.vertex_count() / 2;
}

int genus(const RotationGraph& g) {
  const int numerator = g.vertex_count() - 2 * static_cast<int>(g.lht_paths().size());
  if (numerator % 4 != 0) throw InternalError("genus is not an integer: N_v - 2 N_lht = " + std::to_string(numerator));
  const int value = 1 + numerator / 4;
  if (value < 0) throw InternalError("negative genus " + std::to_string(value));
  return value;
}

std::vector<std::size_t> path_lengths(const RotationGraph& g) {
  std::vector<std::size_t> out;
  out.reserve(g.lht_paths().size());
  for (const auto& p : g.lht_paths()) out.push_back(p.length());
  return out;
}

}  // namespace trisurf
