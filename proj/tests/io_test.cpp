#include "hajos/io.hpp"

#include <gtest/gtest.h>

#include "hajos/corpus.hpp"

namespace hajos {
namespace {

TEST(Graph6, KnownStrings) {
  EXPECT_EQ(to_graph6(complete_graph(3)), "Bw");
  EXPECT_EQ(to_graph6(complete_graph(4)), "C~");
  EXPECT_EQ(to_graph6(complete_graph(5)), "D~{");
  EXPECT_EQ(from_graph6("D~{"), complete_graph(5));
  EXPECT_EQ(from_graph6(">>graph6<<C~\n"), complete_graph(4));
}

TEST(Graph6, RoundTripsEveryEnumeratedGraph) {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_even_connected(n)) EXPECT_EQ(from_graph6(to_graph6(g)), g);
}

TEST(Graph6, RoundTripsLargeOrder) {
  // n >= 63 uses the long size prefix
  Graph g = random_even_bounded_pw(64, 3, 7);
  std::string s = to_graph6(g);
  EXPECT_EQ(s[0], '~');
  EXPECT_EQ(from_graph6(s), g);
}

TEST(Graph6, RejectsTruncated) {
  EXPECT_THROW(from_graph6("D~"), ParseError);
  EXPECT_THROW(from_graph6(""), ParseError);
}

TEST(EdgeList, ParsesWithCommentsAndBlankLines) {
  Graph g = parse_edge_list("# triangle\n3\n\n0 1\n1 2 # last two\n2 0\n");
  EXPECT_EQ(g, complete_graph(3));
  EXPECT_EQ(parse_edge_list(to_edge_list(g)), g);
}

TEST(EdgeList, Errors) {
  EXPECT_THROW(parse_edge_list(""), ParseError);
  EXPECT_THROW(parse_edge_list("3\n0 1\n1"), ParseError);
  EXPECT_THROW(parse_edge_list("3\n0 x\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3\n0 3\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3\n0 0\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3\n0 1\n1 0\n"), ParseError);
}

TEST(ParseGraphs, DetectsFormat) {
  EXPECT_TRUE(looks_like_graph6("D~{\n"));
  EXPECT_FALSE(looks_like_graph6("5\n0 1\n"));
  auto gs = parse_graphs("Bw\nC~\n\nD~{\n");
  ASSERT_EQ(gs.size(), 3u);
  EXPECT_EQ(gs[2], complete_graph(5));
  EXPECT_EQ(parse_graph("3\n0 1\n1 2\n0 2\n"), complete_graph(3));
  EXPECT_THROW(parse_graph("Bw\nC~\n"), ParseError);
}

}  // namespace
}  // namespace hajos
