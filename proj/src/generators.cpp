#include "trisurf/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <vector>

namespace trisurf {

BaseGraph parse_base_graph(const std::string& name) {
  if (name == "theta") return BaseGraph::theta;
  if (name == "tetrahedron") return BaseGraph::tetrahedron;
  if (name == "cube") return BaseGraph::cube;
  throw std::invalid_argument("unknown graph \"" + name + "\" (expected theta, tetrahedron or cube)");
}

const char* to_string(BaseGraph b) {
  switch (b) {
    case BaseGraph::theta:
      return "theta";
    case BaseGraph::tetrahedron:
      return "tetrahedron";
    case BaseGraph::cube:
      return "cube";
  }
  return "?";
}

namespace {

using Face = std::vector<VertexId>;

// Darts are directed edges v -> x, numbered by v then x. For a face listed
// counterclockwise (..., a, v, b, ...) the rotation at v sends v->b to v->a.
GraphData from_faces(VertexId n, const std::vector<Face>& faces) {
  std::vector<std::vector<VertexId>> nbrs(n);
  for (const auto& f : faces) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      const VertexId v = f[i], b = f[(i + 1) % f.size()];
      nbrs[v].push_back(b);
    }
  }
  std::map<std::pair<VertexId, VertexId>, DartId> id;
  GraphData g;
  g.vertex_count = n;
  for (VertexId v = 0; v < n; ++v) {
    auto& ns = nbrs[v];
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    if (ns.size() != 3) throw InternalError("face list does not describe a 3-regular surface");
    for (VertexId x : ns) {
      id[{v, x}] = static_cast<DartId>(g.dart_vertex.size());
      g.dart_vertex.push_back(v);
    }
  }
  g.twin.resize(g.dart_vertex.size());
  g.rotation.assign(g.dart_vertex.size(), -1);
  for (const auto& [edge, d] : id) g.twin[d] = id.at({edge.second, edge.first});
  for (const auto& f : faces) {
    const std::size_t m = f.size();
    for (std::size_t i = 0; i < m; ++i) {
      const VertexId a = f[(i + m - 1) % m], v = f[i], b = f[(i + 1) % m];
      g.rotation[id.at({v, b})] = id.at({v, a});
    }
  }
  return g;
}

GraphData theta_data() {
  GraphData g;
  g.vertex_count = 2;
  g.dart_vertex = {0, 0, 0, 1, 1, 1};
  g.twin = {3, 4, 5, 0, 1, 2};
  g.rotation = {1, 2, 0, 5, 3, 4};  // paths (0 5) (1 3) (2 4)
  return g;
}

GraphData tetrahedron_data() { return from_faces(4, {{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}}); }

GraphData cube_data() {
  // Vertex v sits at ((v >> 2) & 1, (v >> 1) & 1, v & 1).
  const auto coord = [](VertexId v, int axis) { return (v >> (2 - axis)) & 1; };
  std::vector<Face> faces;
  for (int axis = 0; axis < 3; ++axis) {
    for (int side = 0; side < 2; ++side) {
      Face f;
      for (VertexId v = 0; v < 8; ++v)
        if (coord(v, axis) == side) f.push_back(v);
      // Order counterclockwise seen from outside: angle in the plane of the
      // other two axes, reversed when the outward normal points down.
      const int u = (axis + 1) % 3, w = (axis + 2) % 3;
      const double turn = side == 1 ? 1.0 : -1.0;
      std::sort(f.begin(), f.end(), [&](VertexId p, VertexId q) {
        const auto angle = [&](VertexId x) { return turn * std::atan2(coord(x, w) - 0.5, coord(x, u) - 0.5); };
        return angle(p) < angle(q);
      });
      faces.push_back(f);
    }
  }
  return from_faces(8, faces);
}

}  // namespace

GraphData flip_vertices(GraphData data, const std::set<VertexId>& vertices) {
  for (VertexId v : vertices) {
    if (v < 0 || v >= data.vertex_count)
      throw std::invalid_argument("flipped vertex " + std::to_string(v) + " out of range");
  }
  const std::vector<DartId> old = data.rotation;
  for (DartId d = 0; d < static_cast<DartId>(old.size()); ++d) {
    if (vertices.count(data.dart_vertex[d])) data.rotation[old[d]] = d;
  }
  return data;
}

RotationGraph named_graph(const FlipPattern& p) {
  GraphData base;
  switch (p.base) {
    case BaseGraph::theta:
      base = theta_data();
      break;
    case BaseGraph::tetrahedron:
      base = tetrahedron_data();
      break;
    case BaseGraph::cube:
      base = cube_data();
      break;
  }
  return RotationGraph(flip_vertices(std::move(base), p.flipped_vertices));
}

namespace {

using Mat = std::array<int, 4>;  // a b c d

Mat multiply(const Mat& x, const Mat& y, int k) {
  return {(x[0] * y[0] + x[1] * y[2]) % k, (x[0] * y[1] + x[1] * y[3]) % k, (x[2] * y[0] + x[3] * y[2]) % k,
          (x[2] * y[1] + x[3] * y[3]) % k};
}

// Representative of {M, -M}.
Mat canonical(const Mat& m, int k) {
  Mat neg;
  for (int i = 0; i < 4; ++i) neg[i] = (k - m[i]) % k;
  return std::min(m, neg);
}

}  // namespace

RotationGraph platonic_graph(int k, int max_k) {
  if (k < 2) throw std::domain_error("congruence level must be at least 2");
  if (k > max_k)
    throw std::domain_error("congruence level " + std::to_string(k) + " exceeds the size limit " + std::to_string(max_k));

  std::vector<Mat> elements;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        for (int d = 0; d < k; ++d) {
          const Mat m{a, b, c, d};
          if (((a * d - b * c) % k + k) % k == 1 % k && canonical(m, k) == m) elements.push_back(m);
        }
  std::sort(elements.begin(), elements.end());
  std::map<Mat, DartId> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = static_cast<DartId>(i);

  const Mat r{0, 1, k - 1, 1};
  const Mat s{0, k - 1, 1, 0};
  const auto n = static_cast<DartId>(elements.size());
  GraphData g;
  g.twin.resize(n);
  g.rotation.resize(n);
  g.dart_vertex.assign(n, -1);
  for (DartId i = 0; i < n; ++i) {
    g.rotation[i] = index.at(canonical(multiply(r, elements[i], k), k));
    g.twin[i] = index.at(canonical(multiply(s, elements[i], k), k));
  }
  for (DartId i = 0; i < n; ++i) {
    if (g.dart_vertex[i] != -1) continue;
    for (DartId d = i; g.dart_vertex[d] == -1; d = g.rotation[d]) g.dart_vertex[d] = g.vertex_count;
    ++g.vertex_count;
  }
  return RotationGraph(std::move(g));
}

}  // namespace trisurf
