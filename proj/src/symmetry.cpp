#include "trisurf/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace trisurf {

bool GraphMap::is_identity() const {
  for (std::size_t d = 0; d < dart_image.size(); ++d)
    if (dart_image[d] != static_cast<DartId>(d)) return false;
  return true;
}

int GraphMap::order() const {
  GraphMap power = *this;
  int k = 1;
  while (!power.is_identity()) {
    power = compose(*this, power);
    ++k;
  }
  return k;
}

GraphMap compose(const GraphMap& a, const GraphMap& b) {
  GraphMap out;
  out.dart_image.resize(b.dart_image.size());
  for (std::size_t d = 0; d < b.dart_image.size(); ++d) out.dart_image[d] = a.dart_image[b.dart_image[d]];
  out.sign = (a.sign == b.sign) ? Orientation::preserving : Orientation::reversing;
  return out;
}

GraphMap inverse(const GraphMap& m) {
  GraphMap out;
  out.dart_image.resize(m.dart_image.size());
  for (std::size_t d = 0; d < m.dart_image.size(); ++d) out.dart_image[m.dart_image[d]] = static_cast<DartId>(d);
  out.sign = m.sign;
  return out;
}

GraphMap identity_map(const RotationGraph& g) {
  GraphMap m;
  m.dart_image.resize(g.dart_count());
  std::iota(m.dart_image.begin(), m.dart_image.end(), 0);
  return m;
}

bool is_graph_map(const RotationGraph& from, const RotationGraph& to, const GraphMap& m) {
  if (static_cast<std::int32_t>(m.dart_image.size()) != from.dart_count() || from.dart_count() != to.dart_count())
    return false;
  std::vector<bool> hit(to.dart_count(), false);
  for (DartId d = 0; d < from.dart_count(); ++d) {
    const DartId x = m(d);
    if (x < 0 || x >= to.dart_count() || hit[x]) return false;
    hit[x] = true;
  }
  for (DartId d = 0; d < from.dart_count(); ++d) {
    if (m(from.twin(d)) != to.twin(m(d))) return false;
    const DartId expected = m.sign == Orientation::preserving ? to.rotation(m(d)) : to.rotation_inverse(m(d));
    if (m(from.rotation(d)) != expected) return false;
  }
  return true;
}

std::optional<GraphMap> extend_map(const RotationGraph& from, const RotationGraph& to, Flag source, Flag target,
                                   Orientation sign) {
  if (source.dart < 0 || source.dart >= from.dart_count() || from.vertex_of(source.dart) != source.vertex)
    throw std::invalid_argument("source flag is not a (vertex, dart) pair of the graph");
  if (target.dart < 0 || target.dart >= to.dart_count() || to.vertex_of(target.dart) != target.vertex)
    throw std::invalid_argument("target flag is not a (vertex, dart) pair of the graph");
  if (from.dart_count() != to.dart_count()) return std::nullopt;

  const DartId n = from.dart_count();
  std::vector<DartId> image(n, -1);
  std::vector<DartId> preimage(n, -1);
  std::vector<DartId> stack;

  auto assign = [&](DartId d, DartId x) {
    if (image[d] == -1) {
      if (preimage[x] != -1) return false;
      image[d] = x;
      preimage[x] = d;
      stack.push_back(d);
      return true;
    }
    return image[d] == x;
  };

  assign(source.dart, target.dart);
  while (!stack.empty()) {
    const DartId d = stack.back();
    stack.pop_back();
    const DartId x = image[d];
    const DartId turned = sign == Orientation::preserving ? to.rotation(x) : to.rotation_inverse(x);
    if (!assign(from.twin(d), to.twin(x))) return std::nullopt;
    if (!assign(from.rotation(d), turned)) return std::nullopt;
  }
  // Connected graphs are reached completely.
  if (std::find(image.begin(), image.end(), -1) != image.end()) return std::nullopt;
  return GraphMap{std::move(image), sign};
}

std::optional<GraphMap> extend_map(const RotationGraph& g, Flag source, Flag target, Orientation sign) {
  return extend_map(g, g, source, target, sign);
}

std::optional<GraphMap> find_isomorphism(const RotationGraph& from, const RotationGraph& to, Orientation sign) {
  if (from.dart_count() != to.dart_count()) return std::nullopt;
  const Flag source{from.vertex_of(0), 0};
  for (DartId t = 0; t < to.dart_count(); ++t) {
    if (auto m = extend_map(from, to, source, Flag{to.vertex_of(t), t}, sign)) return m;
  }
  return std::nullopt;
}

namespace {

std::vector<GraphMap> close_under(const std::vector<GraphMap>& gens, const GraphMap& identity) {
  std::set<std::vector<DartId>> seen{identity.dart_image};
  std::vector<GraphMap> elements{identity};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& s : gens) {
      GraphMap next = compose(s, elements[i]);
      if (seen.insert(next.dart_image).second) elements.push_back(std::move(next));
    }
  }
  return elements;
}

}  // namespace

SymmetryGroup symmetry_group(const RotationGraph& g) {
  SymmetryGroup group;
  const Flag source{g.vertex_of(0), 0};
  for (Orientation sign : {Orientation::preserving, Orientation::reversing}) {
    for (DartId t = 0; t < g.dart_count(); ++t) {
      if (auto m = extend_map(g, source, Flag{g.vertex_of(t), t}, sign)) group.elements.push_back(std::move(*m));
    }
  }
  group.order = static_cast<int>(group.elements.size());
  group.preserving_order = static_cast<int>(std::count_if(group.elements.begin(), group.elements.end(),
      [](const GraphMap& m) { return m.sign == Orientation::preserving; }));

  if (group.elements.empty() || !group.elements.front().is_identity())
    throw InternalError("symmetry group: identity missing");
  // Closure: the subgroup generated by the found elements must be exactly the
  // found set.
  const auto closure = close_under(generators(group), group.elements.front());
  if (closure.size() != group.elements.size())
    throw InternalError("symmetry group not closed: generated " + std::to_string(closure.size()) + " elements from " +
                        std::to_string(group.elements.size()));
  if (group.preserving_order != group.order && 2 * group.preserving_order != group.order)
    throw InternalError("preserving maps do not form a subgroup of index 1 or 2");
  return group;
}

std::vector<GraphMap> generators(const SymmetryGroup& group) {
  std::vector<GraphMap> gens;
  if (group.elements.empty()) return gens;
  const GraphMap& identity = group.elements.front();
  std::set<std::vector<DartId>> span{identity.dart_image};
  for (const auto& m : group.elements) {
    if (span.count(m.dart_image)) continue;
    gens.push_back(m);
    span.clear();
    for (auto& e : close_under(gens, identity)) span.insert(std::move(e.dart_image));
  }
  return gens;
}

DartId corner_image(const RotationGraph& g, const GraphMap& m, DartId corner) {
  return m.sign == Orientation::preserving ? m(corner) : g.rotation(m(corner));
}

std::vector<std::vector<DartId>> corner_orbits(const RotationGraph& g, const SymmetryGroup& group) {
  const DartId n = g.dart_count();
  std::vector<DartId> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](DartId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& m : group.elements) {
    for (DartId d = 0; d < n; ++d) {
      const DartId a = find(d);
      const DartId b = find(corner_image(g, m, d));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<DartId>> blocks;
  std::vector<int> block_of(n, -1);
  for (DartId d = 0; d < n; ++d) {
    const DartId root = find(d);
    if (block_of[root] == -1) {
      block_of[root] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[block_of[root]].push_back(d);
  }
  return blocks;
}

}  // namespace trisurf
