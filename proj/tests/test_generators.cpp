#include <gtest/gtest.h>

#include "support.hpp"
#include "trisurf/generators.hpp"
#include "trisurf/symmetry.hpp"

using namespace trisurf;
namespace tt = trisurf::testing;

TEST(NamedGraph, Examples) {
  EXPECT_EQ(tt::sorted_lengths(named_graph({BaseGraph::tetrahedron, {}})), (std::vector<std::size_t>{3, 3, 3, 3}));
  const auto t1 = named_graph({BaseGraph::tetrahedron, {2}});
  EXPECT_EQ(tt::sorted_lengths(t1), (std::vector<std::size_t>{3, 9}));
  EXPECT_EQ(genus(t1), 1);
  const auto c2 = named_graph({BaseGraph::cube, {0, 7}});
  EXPECT_EQ(tt::sorted_lengths(c2), (std::vector<std::size_t>{12, 12}));
  EXPECT_EQ(genus(c2), 2);
  // Any pair of opposite cube vertices gives the same invariants.
  for (VertexId v = 0; v < 4; ++v)
    EXPECT_EQ(tt::sorted_lengths(named_graph({BaseGraph::cube, {v, 7 - v}})), (std::vector<std::size_t>{12, 12}));
}

TEST(NamedGraph, ParseAndErrors) {
  EXPECT_EQ(parse_base_graph("cube"), BaseGraph::cube);
  EXPECT_EQ(std::string(to_string(BaseGraph::theta)), "theta");
  EXPECT_THROW(parse_base_graph("octahedron"), std::invalid_argument);
  EXPECT_THROW(named_graph({BaseGraph::theta, {2}}), std::invalid_argument);
}

TEST(NamedGraph, PlanarBasesAreSpheres) {
  for (auto b : {BaseGraph::theta, BaseGraph::tetrahedron, BaseGraph::cube}) EXPECT_EQ(genus(named_graph({b, {}})), 0);
}

TEST(NamedGraph, AllFlippedIsAntiIsomorphic) {
  for (auto b : {BaseGraph::theta, BaseGraph::tetrahedron, BaseGraph::cube}) {
    const auto g = named_graph({b, {}});
    std::set<VertexId> all;
    for (VertexId v = 0; v < g.vertex_count(); ++v) all.insert(v);
    const auto f = named_graph({b, all});
    EXPECT_TRUE(find_isomorphism(g, f, Orientation::reversing).has_value());
    EXPECT_TRUE(find_isomorphism(g.mirrored(), f, Orientation::preserving).has_value());
  }
}

TEST(Platonic, SizesAndPaths) {
  const std::map<int, int> psl_order{{2, 6}, {3, 12}, {4, 24}, {5, 60}, {6, 72}, {7, 168}};
  for (auto [k, order] : psl_order) {
    const auto g = platonic_graph(k);
    EXPECT_EQ(g.dart_count(), order) << k;
    EXPECT_EQ(g.vertex_count(), order / 3) << k;
    for (const auto& p : g.lht_paths()) EXPECT_EQ(p.length(), static_cast<std::size_t>(k)) << k;
    // Each vertex has three distinct darts; paths have equal length so genus
    // follows from N_v and k alone.
    const int cusps = order / k;
    EXPECT_EQ(static_cast<int>(g.lht_paths().size()), cusps);
    EXPECT_EQ(euler_characteristic(g), cusps - g.vertex_count() / 2);
  }
}

TEST(Platonic, Genera) {
  EXPECT_EQ(genus(platonic_graph(5)), 0);
  EXPECT_EQ(platonic_graph(5).lht_paths().size(), 12u);
  const auto g7 = platonic_graph(7);
  EXPECT_EQ(g7.vertex_count(), 56);
  EXPECT_EQ(g7.lht_paths().size(), 24u);
  EXPECT_EQ(genus(g7), 3);
  EXPECT_EQ(symmetry_group(g7).preserving_order, 168);
}

TEST(Platonic, LevelThreeIsTetrahedron) {
  EXPECT_TRUE(find_isomorphism(platonic_graph(3), named_graph({BaseGraph::tetrahedron, {}}), Orientation::preserving)
                  .has_value());
  EXPECT_TRUE(find_isomorphism(platonic_graph(2), named_graph({BaseGraph::theta, {}}), Orientation::preserving)
                  .has_value());
}

TEST(Platonic, SizeGuard) {
  EXPECT_THROW(platonic_graph(1), std::domain_error);
  EXPECT_THROW(platonic_graph(14), std::domain_error);
  EXPECT_NO_THROW(platonic_graph(14, 14));
  EXPECT_EQ(platonic_graph(13).dart_count(), 1092);
}
