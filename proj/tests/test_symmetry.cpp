#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "support.hpp"
#include "trisurf/symmetry.hpp"

using namespace trisurf;
namespace tt = trisurf::testing;

namespace {

bool contains(const SymmetryGroup& grp, const GraphMap& m) {
  return std::find(grp.elements.begin(), grp.elements.end(), m) != grp.elements.end();
}

}  // namespace

TEST(ExtendMap, SameFlagIsIdentity) {
  const auto g = tt::cube({0});
  for (DartId d = 0; d < g.dart_count(); ++d) {
    const Flag f{g.vertex_of(d), d};
    const auto m = extend_map(g, f, f, Orientation::preserving);
    ASSERT_TRUE(m.has_value());
    EXPECT_TRUE(m->is_identity());
  }
}

TEST(ExtendMap, RejectsBadFlag) {
  const auto g = tt::theta(false);
  EXPECT_THROW(extend_map(g, Flag{1, 0}, Flag{0, 0}, Orientation::preserving), std::invalid_argument);
}

TEST(ExtendMap, ThetaFlippedOrderSix) {
  // v1 -> v2 with e1 -> e2, e2 -> e3, e3 -> e1.
  const auto g = tt::theta(true);
  const auto m = extend_map(g, Flag{0, 0}, Flag{1, 4}, Orientation::preserving);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->order(), 6);
  EXPECT_TRUE(is_graph_map(g, g, *m));
}

TEST(ExtendMap, TetrahedronBruteForce) {
  // Every (source flag, target flag) pair; independent of the fixed-source
  // shortcut used by symmetry_group.
  const auto g = tt::tetrahedron();
  std::set<std::vector<DartId>> preserving, reversing;
  int successes = 0;
  for (DartId s = 0; s < g.dart_count(); ++s)
    for (DartId t = 0; t < g.dart_count(); ++t)
      for (auto sign : {Orientation::preserving, Orientation::reversing}) {
        const auto m = extend_map(g, Flag{g.vertex_of(s), s}, Flag{g.vertex_of(t), t}, sign);
        if (!m) continue;
        ++successes;
        ASSERT_TRUE(is_graph_map(g, g, *m));
        (sign == Orientation::preserving ? preserving : reversing).insert(m->dart_image);
      }
  EXPECT_EQ(preserving.size(), 12u);
  EXPECT_EQ(reversing.size(), 12u);
  // Each map is found once per source flag.
  EXPECT_EQ(successes, 12 * 24);
  EXPECT_EQ(symmetry_group(g).preserving_order, 12);
}

TEST(SymmetryGroup, ThetaFlipped) {
  const auto g = tt::theta(true);
  const auto grp = symmetry_group(g);
  EXPECT_EQ(grp.preserving_order, 6);
  EXPECT_TRUE(grp.elements.front().is_identity());
  const auto orbits = corner_orbits(g, grp);
  ASSERT_EQ(orbits.size(), 1u);
  EXPECT_EQ(orbits[0].size(), 6u);
}

TEST(SymmetryGroup, TetrahedronTwoFlipsReflections) {
  const auto g = tt::tetrahedron({0, 1});
  const auto grp = symmetry_group(g);
  int involutions = 0;
  for (const auto& m : grp.elements)
    if (m.sign == Orientation::reversing && m.order() == 2) ++involutions;
  EXPECT_GE(involutions, 3);
  const auto orbits = corner_orbits(g, grp);
  ASSERT_EQ(orbits.size(), 2u);
  std::vector<std::size_t> sizes{orbits[0].size(), orbits[1].size()};
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{4, 8}));
}

TEST(SymmetryGroup, ClosedUnderCompositionAndInverse) {
  for (const auto& gold : tt::golden_graphs()) {
    if (gold.graph.dart_count() > 60) continue;
    const auto grp = symmetry_group(gold.graph);
    for (const auto& a : grp.elements) {
      EXPECT_TRUE(contains(grp, inverse(a))) << gold.name;
      for (const auto& b : grp.elements) EXPECT_TRUE(contains(grp, compose(a, b))) << gold.name;
    }
    EXPECT_TRUE(grp.preserving_order == grp.order || 2 * grp.preserving_order == grp.order);
  }
}

TEST(SymmetryGroup, TwoReversingMakePreserving) {
  const auto g = tt::cube({0, 7});
  const auto grp = symmetry_group(g);
  for (const auto& a : grp.elements)
    for (const auto& b : grp.elements)
      if (a.sign == Orientation::reversing && b.sign == Orientation::reversing) {
        const auto c = compose(a, b);
        EXPECT_EQ(c.sign, Orientation::preserving);
        EXPECT_TRUE(is_graph_map(g, g, c));
      }
}

TEST(SymmetryGroup, TrivialForAsymmetricGraph) {
  std::mt19937_64 rng(7);
  int trivial = 0;
  for (int i = 0; i < 20; ++i) {
    const auto g = tt::random_graph(rng, 16);
    const auto grp = symmetry_group(g);
    if (grp.order == 1) {
      ++trivial;
      EXPECT_TRUE(grp.elements[0].is_identity());
      EXPECT_EQ(corner_orbits(g, grp).size(), static_cast<std::size_t>(g.dart_count()));
    }
  }
  EXPECT_GT(trivial, 0);
}

TEST(CornerImage, MapsCuspsToCusps) {
  for (const auto& gold : tt::golden_graphs()) {
    const auto& g = gold.graph;
    for (const auto& m : symmetry_group(g).elements) {
      for (const auto& p : g.lht_paths()) {
        std::set<std::size_t> target;
        for (DartId d : p.darts) target.insert(g.path_of(corner_image(g, m, d)));
        ASSERT_EQ(target.size(), 1u) << gold.name;
        EXPECT_EQ(g.lht_paths()[*target.begin()].length(), p.length());
      }
    }
  }
}

TEST(Isomorphism, AllFlippedIsMirror) {
  for (auto base : {BaseGraph::theta, BaseGraph::tetrahedron, BaseGraph::cube}) {
    const auto g = named_graph({base, {}});
    std::set<VertexId> all;
    for (VertexId v = 0; v < g.vertex_count(); ++v) all.insert(v);
    const auto flipped = named_graph({base, all});
    const auto m = extend_map(g, flipped, Flag{0, 0}, Flag{0, 0}, Orientation::reversing);
    ASSERT_TRUE(m.has_value());
    EXPECT_TRUE(m->is_identity());
    EXPECT_TRUE(is_graph_map(g, flipped, *m));
  }
}
