#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"
#include "trisurf/graph.hpp"

using namespace trisurf;
using trisurf::testing::sorted_lengths;

namespace {

GraphData theta_data() {
  GraphData g;
  g.vertex_count = 2;
  g.dart_vertex = {0, 0, 0, 1, 1, 1};
  g.twin = {3, 4, 5, 0, 1, 2};
  g.rotation = {1, 2, 0, 5, 3, 4};
  return g;
}

bool has_rule(const ValidationReport& r, const std::string& rule) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.rule == rule; });
}

}  // namespace

TEST(Validate, ThetaIsValid) { EXPECT_TRUE(validate(theta_data()).ok()); }

TEST(Validate, TwinFixedPoint) {
  auto g = theta_data();
  g.twin[0] = 0;
  const auto r = validate(g);
  EXPECT_TRUE(has_rule(r, "twin-involution"));
  EXPECT_THROW(RotationGraph{g}, ValidationError);
}

TEST(Validate, RotationTwoCycle) {
  auto g = theta_data();
  g.rotation = {1, 0, 2, 5, 3, 4};
  EXPECT_TRUE(has_rule(validate(g), "rotation-3-cycles"));
}

TEST(Validate, ReportsEveryViolation) {
  auto g = theta_data();
  g.twin[0] = 0;                    // twin
  g.rotation = {1, 0, 2, 5, 3, 4};  // rotation
  g.dart_vertex[5] = 7;             // vertex range
  const auto r = validate(g);
  EXPECT_TRUE(has_rule(r, "twin-involution"));
  EXPECT_TRUE(has_rule(r, "rotation-3-cycles"));
  EXPECT_TRUE(has_rule(r, "vertex-range"));
  EXPECT_GE(r.violations.size(), 3u);
}

TEST(Validate, ArraySizes) {
  auto g = theta_data();
  g.rotation.pop_back();
  EXPECT_TRUE(has_rule(validate(g), "array-sizes"));
}

TEST(Validate, DartCount) {
  auto g = theta_data();
  g.vertex_count = 3;
  EXPECT_TRUE(has_rule(validate(g), "dart-count"));
}

TEST(Validate, RotationAcrossVertices) {
  auto g = theta_data();
  g.rotation = {1, 2, 3, 5, 0, 4};
  EXPECT_FALSE(validate(g).ok());
}

TEST(Validate, Disconnected) {
  GraphData g;
  g.vertex_count = 4;
  g.dart_vertex = {0, 0, 0, 1, 1, 1, 2, 2, 2, 3, 3, 3};
  g.twin = {3, 4, 5, 0, 1, 2, 9, 10, 11, 6, 7, 8};
  g.rotation = {1, 2, 0, 4, 5, 3, 7, 8, 6, 10, 11, 9};
  EXPECT_TRUE(has_rule(validate(g), "connected"));
}

TEST(Validate, LoopsAllowed) {
  // Vertex 0 carries a loop (darts 0, 1) and one edge to vertex 1, which also
  // carries a loop.
  GraphData g;
  g.vertex_count = 2;
  g.dart_vertex = {0, 0, 0, 1, 1, 1};
  g.twin = {1, 0, 5, 4, 3, 2};
  g.rotation = {1, 2, 0, 4, 5, 3};
  ASSERT_TRUE(validate(g).ok()) << validate(g).summary();
  const RotationGraph rg(g);
  std::size_t total = 0;
  for (auto l : path_lengths(rg)) total += l;
  EXPECT_EQ(total, 6u);
  EXPECT_GE(genus(rg), 0);
}

TEST(Trace, ThetaOriented) {
  const RotationGraph g(theta_data());
  EXPECT_EQ(sorted_lengths(g), (std::vector<std::size_t>{2, 2, 2}));
  EXPECT_EQ(euler_characteristic(g), 2);
  EXPECT_EQ(genus(g), 0);
}

TEST(Trace, ThetaFlipped) {
  const auto g = trisurf::testing::theta(true);
  EXPECT_EQ(sorted_lengths(g), (std::vector<std::size_t>{6}));
  EXPECT_EQ(genus(g), 1);
}

TEST(Trace, CubeOneFlip) {
  EXPECT_EQ(sorted_lengths(trisurf::testing::cube({0})), (std::vector<std::size_t>{4, 4, 4, 12}));
}

TEST(Trace, SuccessorRuleAndCanonicalForm) {
  for (const auto& gold : trisurf::testing::golden_graphs()) {
    const auto& g = gold.graph;
    std::vector<int> seen(g.dart_count(), 0);
    const auto& paths = g.lht_paths();
    for (std::size_t i = 0; i < paths.size(); ++i) {
      const auto& p = paths[i];
      EXPECT_EQ(p.darts.front(), *std::min_element(p.darts.begin(), p.darts.end())) << gold.name;
      for (std::size_t k = 0; k < p.length(); ++k) {
        EXPECT_EQ(p.darts[(k + 1) % p.length()], g.successor(p.darts[k]));
        ++seen[p.darts[k]];
        EXPECT_EQ(g.path_of(p.darts[k]), i);
      }
      if (i > 0) {
        const auto& q = paths[i - 1];
        EXPECT_TRUE(q.length() < p.length() || (q.length() == p.length() && q.min_dart() < p.min_dart()));
      }
    }
    for (int s : seen) EXPECT_EQ(s, 1) << gold.name;
  }
}

TEST(Genus, Examples) {
  EXPECT_EQ(euler_characteristic(trisurf::testing::tetrahedron()), 2);
  EXPECT_EQ(euler_characteristic(trisurf::testing::cube({0, 7})), -2);
  EXPECT_EQ(genus(trisurf::testing::cube()), 0);
  EXPECT_EQ(genus(trisurf::testing::cube({0, 7})), 2);
}

TEST(Graph, DartsAtStartsAtSmallest) {
  const auto g = trisurf::testing::cube({3});
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& s = g.darts_at(v);
    EXPECT_EQ(s[0], *std::min_element(s.begin(), s.end()));
    EXPECT_EQ(g.rotation(s[0]), s[1]);
    EXPECT_EQ(g.rotation(s[1]), s[2]);
    for (int p = 0; p < 3; ++p) EXPECT_EQ(g.position(s[p]), p);
  }
}

TEST(Graph, MirrorReversesRotation) {
  const auto g = trisurf::testing::tetrahedron({2});
  const auto m = g.mirrored();
  for (DartId d = 0; d < g.dart_count(); ++d) EXPECT_EQ(m.rotation(g.rotation(d)), d);
  EXPECT_EQ(genus(m), genus(g));
  EXPECT_EQ(sorted_lengths(m), sorted_lengths(g));
}
