#include <gtest/gtest.h>

#include "support.hpp"
#include "trisurf/io.hpp"

using namespace trisurf;

TEST(GraphJson, RoundTrip) {
  const auto g = trisurf::testing::cube({0, 7});
  const std::string text = to_canonical_json(graph_to_json(g));
  const GraphData back = parse_graph_json(text);
  EXPECT_EQ(back.vertex_count, g.vertex_count());
  EXPECT_EQ(back.twin, g.data().twin);
  EXPECT_EQ(back.rotation, g.data().rotation);
  EXPECT_EQ(back.dart_vertex, g.data().dart_vertex);
}

TEST(GraphJson, SyntaxErrorCarriesLine) {
  try {
    parse_graph_json("{\n  \"vertex_count\": 2,\n  \"twin\": [3, 4,,\n}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(GraphJson, MissingField) {
  try {
    parse_graph_json(R"({"vertex_count": 2, "twin": [3,4,5,0,1,2], "rotation": [1,2,0,5,3,4]})");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("dart_vertex"), std::string::npos);
  }
}

TEST(GraphJson, NonIntegerEntry) {
  EXPECT_THROW(parse_graph_json(R"({"vertex_count": 2, "twin": [3,4,5,0,1,2.5], "rotation": [1,2,0,5,3,4],
                                   "dart_vertex": [0,0,0,1,1,1]})"),
               ParseError);
}

TEST(CanonicalJson, SortedKeysAndSeventeenDigits) {
  Json j = {{"b", 0.1}, {"a", {1, 2, 3}}, {"c", {{"z", 1}, {"y", "s"}}}};
  const std::string s = to_canonical_json(j, -1);
  EXPECT_EQ(s, "{\"a\":[1, 2, 3],\"b\":0.10000000000000001,\"c\":{\"y\":\"s\",\"z\":1}}\n");
  EXPECT_EQ(to_canonical_json(j), to_canonical_json(Json::parse(j.dump())));
}

TEST(CanonicalJson, NonFiniteBecomesNull) {
  Json j = {{"x", std::numeric_limits<double>::infinity()}};
  EXPECT_EQ(to_canonical_json(j, -1), "{\"x\":null}\n");
}
