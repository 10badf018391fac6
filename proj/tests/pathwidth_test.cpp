#include "hajos/pathwidth.hpp"

#include <gtest/gtest.h>

#include "hajos/corpus.hpp"

namespace hajos {
namespace {

Graph path(int n) {
  std::vector<std::pair<Vertex, Vertex>> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, es);
}

Graph cycle(int n) {
  std::vector<std::pair<Vertex, Vertex>> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, es);
}

// Windows {i, ..., i+6} over 14 vertices: 8 smooth bags of width 6.
PathDecomposition windows() {
  PathDecomposition pd;
  for (int i = 0; i < 8; ++i) {
    std::vector<Vertex> b;
    for (int j = i; j <= i + 6; ++j) b.push_back(j);
    pd.bags.emplace_back(b);
  }
  return pd;
}

// K7 on 0..6 and K7 on 7..13.
Graph two_k7() {
  std::vector<std::pair<Vertex, Vertex>> es;
  for (int base : {0, 7})
    for (int a = 0; a < 7; ++a)
      for (int b = a + 1; b < 7; ++b) es.emplace_back(base + a, base + b);
  return Graph::from_edge_list(14, es);
}

TEST(FindPathDecomposition, CompleteGraphs) {
  auto k7 = find_path_decomposition(complete_graph(7), 6);
  ASSERT_TRUE(k7);
  EXPECT_TRUE(is_valid_decomposition(complete_graph(7), *k7));
  EXPECT_LE(k7->width(), 6);
  EXPECT_FALSE(find_path_decomposition(complete_graph(8), 6));
  EXPECT_FALSE(find_path_decomposition(complete_graph(7), 5));
}

TEST(FindPathDecomposition, PathsAndCycles) {
  auto p = find_path_decomposition(path(5), 1);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->width(), 1);
  EXPECT_TRUE(is_valid_decomposition(path(5), *p));
  EXPECT_FALSE(find_path_decomposition(cycle(7), 1));
  EXPECT_TRUE(find_path_decomposition(cycle(7), 2));
  EXPECT_FALSE(find_path_decomposition(path(3), -1));
}

TEST(FindPathDecomposition, Limits) {
  EXPECT_THROW(find_path_decomposition(path(5), 7), PathwidthError);
  EXPECT_THROW(find_path_decomposition(path(kMaxPathwidthVertices + 1), 1), PathwidthError);
}

TEST(FindPathDecomposition, RecoversGeneratorWidth) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int k = 2 + static_cast<int>(seed % 5);
    Graph g = random_even_bounded_pw(12 + static_cast<int>(seed % 20), k, seed);
    auto pd = find_path_decomposition(g, k);
    ASSERT_TRUE(pd) << seed;
    EXPECT_TRUE(is_valid_decomposition(g, *pd));
    EXPECT_LE(pd->width(), k);
  }
}

TEST(Validity, RejectsBrokenDecompositions) {
  Graph g = path(4);
  EXPECT_TRUE(is_valid_decomposition(g, {{VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{2, 3}}}));
  EXPECT_FALSE(is_valid_decomposition(g, {{VertexSet{0, 1}, VertexSet{2, 3}}}));
  EXPECT_FALSE(is_valid_decomposition(g, {{VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{2, 3}, VertexSet{1}}}));
  EXPECT_FALSE(is_valid_decomposition(g, {{VertexSet{0, 1}, VertexSet{1, 2}}}));
}

TEST(Smooth, Examples) {
  PathDecomposition dup{{VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{1, 2}, VertexSet{2, 3}, VertexSet{3, 4}}};
  auto s = smooth(dup);
  EXPECT_TRUE(is_smooth(s));
  EXPECT_EQ(s.bags.size(), 4u);
  EXPECT_TRUE(is_valid_decomposition(path(5), s));

  PathDecomposition already{{VertexSet{0, 1}, VertexSet{1, 2}}};
  EXPECT_EQ(smooth(already), already);

  auto k7 = smooth(*find_path_decomposition(complete_graph(7), 6));
  EXPECT_EQ(k7.bags.size(), 1u);
}

TEST(Smooth, PreservesWidthAndValidity) {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const int k = 2 + static_cast<int>(seed % 5);
    const int n = 15 + static_cast<int>(seed % 15);
    Graph g = random_even_bounded_pw(n, k, seed);
    auto pd = find_path_decomposition(g, k);
    ASSERT_TRUE(pd);
    auto s = smooth(*pd);
    EXPECT_TRUE(is_smooth(s));
    EXPECT_TRUE(is_valid_decomposition(g, s));
    EXPECT_EQ(s.width(), pd->width());
    EXPECT_EQ(static_cast<int>(s.bags.size()), n - s.width());
  }
}

TEST(BoundaryReport, C7) {
  auto pd = smooth(*find_path_decomposition(cycle(7), 2));
  ASSERT_EQ(pd.bags.size(), 5u);
  auto r = boundary_report(cycle(7), pd);
  EXPECT_EQ(r.width, 2);
  EXPECT_EQ(r.boundary.size(), 8u);  // both directions of each of the 4 path edges
  for (const auto& b : r.boundary) {
    EXPECT_TRUE(pd.bags[static_cast<std::size_t>(b.s - 1)].contains(b.vertex));
    EXPECT_FALSE(pd.bags[static_cast<std::size_t>(b.t - 1)].contains(b.vertex));
  }
  EXPECT_TRUE(r.eq1_holds);
  EXPECT_TRUE(r.eq2_holds);
}

TEST(BoundaryReport, SingleBagAndNotSmooth) {
  auto r = boundary_report(complete_graph(7), {{VertexSet{0, 1, 2, 3, 4, 5, 6}}});
  EXPECT_TRUE(r.boundary.empty());
  PathDecomposition rough{{VertexSet{0, 1}, VertexSet{1, 2, 3}}};
  EXPECT_THROW(boundary_report(path(4), rough), PathwidthError);
}

TEST(BoundaryReport, EquationsHoldOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int k = 2 + static_cast<int>(seed % 5);
    Graph g = random_even_bounded_pw(10 + static_cast<int>(seed % 25), k, seed);
    auto pd = smooth(*find_path_decomposition(g, k));
    auto r = boundary_report(g, pd);
    EXPECT_TRUE(r.eq1_holds) << seed;
    EXPECT_TRUE(r.eq2_holds) << seed;
    for (const auto& c : r.low_degree_guarantees) {
      EXPECT_LE(g.degree(c.left), c.bound);
      EXPECT_LE(g.degree(c.right), c.bound);
    }
  }
}

TEST(LocateStructure, Adj5FromEitherEnd) {
  PathDecomposition pd = windows();
  ASSERT_TRUE(is_smooth(pd));
  ASSERT_TRUE(is_valid_decomposition(two_k7(), pd));
  auto r = locate_structure(two_k7(), pd);
  ASSERT_TRUE(r.location);
  EXPECT_FALSE(r.low_degree_vertex);
  EXPECT_EQ(r.location->u, 0);
  EXPECT_EQ(r.location->v, 1);
  EXPECT_EQ(r.location->w, 2);
  EXPECT_EQ(r.location->kind, LocatedCase::Adj5);
  EXPECT_EQ(r.location->common, (VertexSet{2, 3, 4, 5, 6}));

  std::reverse(pd.bags.begin(), pd.bags.end());
  auto m = locate_structure(two_k7(), pd);
  ASSERT_TRUE(m.location);
  EXPECT_EQ(m.location->u, 13);
  EXPECT_EQ(m.location->v, 12);
}

TEST(LocateStructure, LowDegreeVertex) {
  std::vector<std::pair<Vertex, Vertex>> es{{0, 1}, {1, 2}, {0, 2}, {11, 12}, {12, 13}, {11, 13}};
  Graph g = Graph::from_edge_list(14, es);
  auto r = locate_structure(g, windows());
  EXPECT_FALSE(r.location);
  ASSERT_TRUE(r.low_degree_vertex);
  EXPECT_EQ(*r.low_degree_vertex, 0);
  EXPECT_THROW(locate_structure(cycle(7), smooth(*find_path_decomposition(cycle(7), 2))), PathwidthError);
}

TEST(LocateStructure, ConsistentOnRandomWidthSix) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = random_even_bounded_pw(20 + static_cast<int>(seed % 21), 6, seed);
    auto pd = smooth(*find_path_decomposition(g, 6));
    if (pd.width() != 6 || pd.bags.size() < 4) continue;
    auto r = locate_structure(g, pd);
    EXPECT_NE(static_cast<bool>(r.location), static_cast<bool>(r.low_degree_vertex));
    if (r.low_degree_vertex) EXPECT_LE(g.degree(*r.low_degree_vertex), 5);
    if (r.location) {
      const auto& l = *r.location;
      EXPECT_GE(g.degree(l.u), 6);
      EXPECT_EQ(g.has_edge(l.u, l.v), l.kind != LocatedCase::NonAdj6);
    }
  }
}

}  // namespace
}  // namespace hajos
