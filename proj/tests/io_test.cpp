#include "simtri/io.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "simtri/error.hpp"
#include "support/brute.hpp"

namespace simtri {
namespace {

TEST(ParseGraph, C4) {
  const Graph g = parse_graph("4\n0 1\n1 2\n2 3\n3 0");
  EXPECT_EQ(g, Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
}

TEST(ParseGraph, CommentsAndBlankLines) {
  const Graph g = parse_graph("# triangle\n\n3\n0 1\n# middle\n1 2\n\n0 2\n");
  EXPECT_EQ(g.edge_count(), 3u);
}

TEST(ParseGraph, Errors) {
  EXPECT_THROW(parse_graph("2\n0 0"), SelfLoop);
  EXPECT_THROW(parse_graph("3\n0 1\n0 1"), DuplicateEdge);
  EXPECT_THROW(parse_graph("3\n0 1\n1 0"), DuplicateEdge);
  EXPECT_THROW(parse_graph(""), ParseError);
  EXPECT_THROW(parse_graph("x\n"), ParseError);
  EXPECT_THROW(parse_graph("3\n0 5\n"), ParseError);
  EXPECT_THROW(parse_graph("3\n0 1 2\n"), ParseError);
  EXPECT_THROW(parse_graph("3\n0\n"), ParseError);
}

TEST(ParseGraph, ReportsLineNumber) {
  try {
    parse_graph("3\n0 1\n\n1 x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
  }
}

TEST(ParseGraph, RoundTrip) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_graph(1 + static_cast<std::size_t>(trial % 9), 0.4, rng);
    EXPECT_EQ(parse_graph(format_graph(g)), g);
  }
  EXPECT_EQ(parse_graph(format_graph(Graph(0))), Graph(0));
}

TEST(ParseOrder, Examples) {
  EXPECT_EQ(parse_order("4\n0 < 2\n1 < 3"), make_partial_order(4, {{0, 2}, {1, 3}}));
  EXPECT_THROW(parse_order("2\n0 < 1\n1 < 0"), CycleError);
  const PartialOrder chain = parse_order("3\n0 < 1\n1 < 2");
  EXPECT_TRUE(chain.less(0, 2));
  EXPECT_EQ(parse_order("3\n0<1\n"), make_partial_order(3, {{0, 1}}));
}

TEST(ParseOrder, Errors) {
  EXPECT_THROW(parse_order("3\n0 1\n"), ParseError);
  EXPECT_THROW(parse_order("3\n0 < 3\n"), ParseError);
  EXPECT_THROW(parse_order("3\n0 > 1\n"), ParseError);
}

TEST(ParseOrder, RoundTrip) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const PartialOrder p = testing::random_order(1 + static_cast<std::size_t>(trial % 8), 0.35, rng);
    EXPECT_EQ(parse_order(format_order(p)), p);
  }
}

TEST(ParseOrdering, Examples) {
  EXPECT_EQ(parse_ordering("2,0,1"), Ordering({2, 0, 1}));
  EXPECT_EQ(parse_ordering(" 1, 0 "), Ordering({1, 0}));
  EXPECT_THROW(parse_ordering("0,0"), InvalidPermutation);
  EXPECT_THROW(parse_ordering("0,a"), ParseError);
}

TEST(Representation, SingleVertexDocument) {
  const TriangleRepresentation t({{1, 1, 2}});
  EXPECT_EQ(emit_representation(t, RepresentationFormat::structured),
            R"({"version":1,"triangles":[{"v":0,"apex":1,"base":[1,2]}]})");
}

TEST(Representation, ChainDocumentOrder) {
  const TriangleRepresentation t({{1, 1, 2}, {2, 3, 4}, {3, 5, 6}});
  EXPECT_EQ(emit_representation(t, RepresentationFormat::structured),
            R"({"version":1,"triangles":[{"v":0,"apex":1,"base":[1,2]},{"v":1,"apex":2,"base":[3,4]},)"
            R"({"v":2,"apex":3,"base":[5,6]}]})");
}

TEST(Representation, StructuredRoundTrip) {
  const TriangleRepresentation t({{3, 1, 4}, {1, 2, 6}, {2, 5, 6}});
  EXPECT_EQ(parse_representation(emit_representation(t, RepresentationFormat::structured)), t);
}

TEST(Representation, ParseErrors) {
  EXPECT_THROW(parse_representation("not json"), ParseError);
  EXPECT_THROW(parse_representation(R"({"version":2,"triangles":[]})"), ParseError);
  EXPECT_THROW(parse_representation(R"({"version":1,"triangles":[{"v":1,"apex":1,"base":[1,2]}]})"), ParseError);
  EXPECT_THROW(parse_representation(R"({"version":1,"triangles":[{"v":0,"apex":1,"base":[2,2]}]})"), ParseError);
}

TEST(Representation, Svg) {
  const TriangleRepresentation t({{1, 1, 4}, {3, 1, 2}, {2, 5, 6}, {4, 3, 4}});
  const std::string svg = emit_representation(t, RepresentationFormat::svg);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  std::size_t polygons = 0;
  for (std::size_t at = svg.find("<polygon"); at != std::string::npos; at = svg.find("<polygon", at + 1)) ++polygons;
  EXPECT_EQ(polygons, 4u);
}

}  // namespace
}  // namespace simtri
