#include <gtest/gtest.h>

#include "generators.hpp"
#include "latknot/io.hpp"
#include "latknot/torus.hpp"

namespace latknot {
namespace {

constexpr const char* kTrefoilJson =
    R"({"types":["z+","x+","y+","z-","x-","y-","z+","x+","y+","z-","x-","y-"],)"
    R"("lengths":{"x":[2,3,2,1],"y":[1,2,3,2],"z":[3,2,1,2]},"origin":[0,0,0]})"
    "\n";

TEST(TabulationJson, BitExactWriter) { EXPECT_EQ(tabulation_to_json(generate_torus_tabulation(2)), kTrefoilJson); }

TEST(TabulationJson, RoundTrip) {
  for (int p = 2; p <= 9; ++p) {
    auto tab = generate_torus_tabulation(p);
    tab.origin = {p, -p, 7};
    const std::string text = tabulation_to_json(tab);
    EXPECT_EQ(tabulation_from_json(text), tab);
    EXPECT_EQ(tabulation_to_json(tabulation_from_json(text)), text);
  }
}

TEST(TabulationJson, AcceptsWhitespaceAndMissingOrigin) {
  const auto tab = tabulation_from_json(R"({
    "types": ["x+", "y+", "x-", "y-"],
    "lengths": {"x": [1, 1], "y": [1, 1]}
  })");
  EXPECT_EQ(tab.origin, (LatticePoint{0, 0, 0}));
  EXPECT_TRUE(tab.column(Axis::z).empty());
  EXPECT_EQ(build_knot(tab).edge_length(), 4U);
}

TEST(TabulationJson, SyntaxErrorsCarryPosition) {
  try {
    tabulation_from_json("{\n  \"types\": [\"x+\",\n  ]\n}");
    FAIL();
  } catch (const ParseError& e) {
    ASSERT_TRUE(e.line().has_value());
    EXPECT_EQ(*e.line(), 3U);
    EXPECT_EQ(*e.column(), 3U);
  }
}

TEST(TabulationJson, SchemaErrors) {
  EXPECT_THROW(tabulation_from_json("[1,2]"), ParseError);
  EXPECT_THROW(tabulation_from_json(R"({"lengths":{}})"), ParseError);
  EXPECT_THROW(tabulation_from_json(R"({"types":["q+"],"lengths":{}})"), ParseError);
  EXPECT_THROW(tabulation_from_json(R"({"types":["x+"],"lengths":{"x":[1.5]}})"), ParseError);
  EXPECT_THROW(tabulation_from_json(R"({"types":[],"lengths":{},"origin":[0,0]})"), ParseError);
}

TEST(VertexCsv, WriterFlagsCriticalVertices) {
  const auto k = knot_from_vertices(std::vector<LatticePoint>{{0, 0, 0}, {2, 0, 0}, {2, 1, 0}, {0, 1, 0}});
  EXPECT_EQ(knot_to_csv(k),
            "x,y,z,critical\n0,0,0,1\n1,0,0,0\n2,0,0,1\n2,1,0,1\n1,1,0,0\n0,1,0,1\n");
}

TEST(VertexCsv, RoundTripIsIdentity) {
  testing::Rng rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const LatticeKnot k = testing::random_knot(rng, 60);
    const std::string csv = knot_to_csv(k);
    const LatticeKnot back = knot_from_vertices(vertices_from_csv(csv));
    EXPECT_EQ(back, k);
    EXPECT_EQ(knot_to_csv(back), csv);
  }
}

TEST(VertexCsv, ParseErrors) {
  try {
    vertices_from_csv("x,y,z\n0,0,0\n1,zero,0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3U);
    EXPECT_EQ(e.column(), 3U);
  }
  EXPECT_THROW(vertices_from_csv("1,2\n"), ParseError);
  EXPECT_THROW(vertices_from_csv("x,y,z,critical\n"), ParseError);
}

TEST(Obj, UnitSquare) {
  const auto k = knot_from_vertices(std::vector<LatticePoint>{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}});
  EXPECT_EQ(knot_to_obj(k), "v 0 0 0\nv 1 0 0\nv 1 1 0\nv 0 1 0\nl 1 2 3 4 1\n");
}

TEST(Obj, VertexCountIsEdgeLength) {
  const std::string obj = knot_to_obj(build_knot(generate_torus_tabulation(7)));
  EXPECT_EQ(std::count(obj.begin(), obj.end(), 'v'), 264);
}

TEST(KnotInputTest, DetectsFormat) {
  EXPECT_TRUE(parse_knot_input(kTrefoilJson).tabulation.has_value());
  const auto csv = parse_knot_input("0,0,0\n1,0,0\n1,1,0\n0,1,0\n");
  EXPECT_FALSE(csv.tabulation.has_value());
  EXPECT_EQ(build_knot(csv).edge_length(), 4U);
  EXPECT_THROW(parse_knot_input(""), ParseError);
  EXPECT_THROW(parse_knot_input("  \n\n"), ParseError);
}

TEST(KnotJson, IsTheCanonicalTabulation) {
  const LatticeKnot k = build_knot(generate_torus_tabulation(3), {4, 5, 6});
  const auto tab = tabulation_from_json(knot_to_json(k));
  EXPECT_EQ(tab, k.canonical_tabulation());
}

}  // namespace
}  // namespace latknot
