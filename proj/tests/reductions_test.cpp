#include "hajos/plan.hpp"
#include "hajos/structures.hpp"

#include <gtest/gtest.h>

#include "hajos/corpus.hpp"

namespace hajos {
namespace {

std::optional<ReducibleStructure> find(const Graph& g, Variant v) {
  for (const auto& s : find_structures(g))
    if (s.variant == v) return s;
  return std::nullopt;
}

ReductionPlan must_plan(const Graph& g, const ReducibleStructure& s) {
  auto r = plan(g, s);
  if (auto* in = std::get_if<Inapplicable>(&r)) ADD_FAILURE() << in->reason;
  return std::get<ReductionPlan>(r);
}

std::size_t count(const std::vector<ReducibleStructure>& ss, Variant v) {
  return static_cast<std::size_t>(std::count_if(ss.begin(), ss.end(), [&](const auto& s) { return s.variant == v; }));
}

// u=0, v=1 adjacent; common neighbourhood 2..6 inducing C5.
Graph adj5_c5() {
  return Graph::from_edge_list(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 2}, {1, 3}, {1, 4}, {1, 5},
                                   {1, 6}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 6}});
}

TEST(FindStructures, OddCycleIsAllDegreeTwo) {
  std::vector<std::pair<Vertex, Vertex>> es;
  for (int i = 0; i < 7; ++i) es.emplace_back(i, (i + 1) % 7);
  auto ss = find_structures(Graph::from_edge_list(7, es));
  EXPECT_EQ(count(ss, Variant::Deg24Odd), 7u);
  EXPECT_EQ(count(ss, Variant::Deg2Bypass), 7u);
  EXPECT_EQ(ss.front().variant, Variant::Deg24Odd);
  EXPECT_EQ(ss.front().u, 0);
}

TEST(FindStructures, TwoApexesOverC6AreNonAdj6) {
  std::vector<std::pair<Vertex, Vertex>> es;
  for (int i = 0; i < 6; ++i) {
    es.emplace_back(2 + i, 2 + (i + 1) % 6);
    es.emplace_back(0, 2 + i);
    es.emplace_back(1, 2 + i);
  }
  Graph g = Graph::from_edge_list(8, es);
  auto s = find(g, Variant::NonAdj6);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->u, 0);
  EXPECT_EQ(s->v, 1);
  EXPECT_EQ(s->N, (VertexSet{2, 3, 4, 5, 6, 7}));
}

TEST(FindStructures, PriorityOrderIsStable) {
  Graph g = adj5_c5();
  auto ss = find_structures(g);
  ASSERT_FALSE(ss.empty());
  for (std::size_t i = 1; i < ss.size(); ++i) EXPECT_LE(ss[i - 1].variant, ss[i].variant);
  EXPECT_EQ(count(ss, Variant::Adj5), 1u);
  EXPECT_EQ(find_structures(g).size(), ss.size());
}

TEST(FindStructures, Adj4ConnectorIsShortestPath) {
  // u=0 v=1, N={2,3,4,5}, x_u=6, x_v=7, connector 6-8-7 or 6-9-10-7
  Graph g = Graph::from_edge_list(11, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 2}, {1, 3}, {1, 4}, {1, 5},
                                       {1, 7}, {6, 8}, {8, 7}, {6, 9}, {9, 10}, {10, 7}, {2, 3}, {4, 5}});
  auto s = find(g, Variant::Adj4);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->x_u, 6);
  EXPECT_EQ(s->x_v, 7);
  ASSERT_TRUE(s->connector);
  EXPECT_EQ(*s->connector, (std::vector<Vertex>{6, 8, 7}));
}

TEST(Plan, Adj5C5UsesInducedPathCase) {
  Graph g = adj5_c5();
  auto s = find(g, Variant::Adj5);
  ASSERT_TRUE(s);
  auto p = must_plan(g, *s);
  EXPECT_EQ(p.lift_case.tag, "adj5.iii");
  EXPECT_EQ(p.removed_vertices, (VertexSet{0, 1}));
  EXPECT_EQ(p.removed_edges.size(), 1u);
  EXPECT_EQ(p.added_edges.size(), 3u);
  const auto& y = p.lift_case.y;
  // y1..y4 is an induced P4 of the C5; the removed edge is y2y3
  EXPECT_TRUE(g.has_edge(y[0], y[1]) && g.has_edge(y[1], y[2]) && g.has_edge(y[2], y[3]));
  EXPECT_FALSE(g.has_edge(y[0], y[2]) || g.has_edge(y[1], y[3]) || g.has_edge(y[0], y[3]));
  EXPECT_EQ(p.removed_edges[0], Edge(y[1], y[2]));
  Graph h = apply_plan(g, p);
  EXPECT_EQ(h.n(), 5);
  EXPECT_EQ(h.m(), 7);
  EXPECT_TRUE(is_even_graph(h));
}

TEST(Plan, Adj4WithoutConnectorIsInapplicable) {
  Graph g = Graph::from_edge_list(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 2}, {1, 3}, {1, 4}, {1, 5},
                                      {1, 7}, {6, 2}, {7, 3}, {2, 3}});
  ASSERT_TRUE(is_even_graph(g));
  auto s = find(g, Variant::Adj4);
  ASSERT_TRUE(s);
  EXPECT_FALSE(s->connector);
  auto r = plan(g, *s);
  ASSERT_TRUE(std::holds_alternative<Inapplicable>(r));
  EXPECT_EQ(std::get<Inapplicable>(r).reason, "NoConnector");
}

TEST(Plan, Deg4GM) {
  Graph g = Graph::from_edge_list(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 5}, {4, 5}});
  auto s = find(g, Variant::Deg4GM);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->x, (std::vector<Vertex>{1, 2, 3, 4}));
  auto p = must_plan(g, *s);
  EXPECT_EQ(p.lift_case.tag, "gm");
  EXPECT_TRUE(p.removed_vertices.empty());
  EXPECT_EQ(p.removed_edges, (std::vector<Edge>{{0, 3}, {0, 4}}));
  EXPECT_EQ(p.added_edges, (std::vector<Edge>{{3, 4}}));
  Graph h = apply_plan(g, p);
  EXPECT_EQ(h.n(), 6);
  EXPECT_EQ(h.m(), g.m() - 1);
}

TEST(Plan, Deg6CliqueDropsOneEdge) {
  Graph g = Graph::from_edge_list(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 2}, {1, 3}, {1, 4}, {2, 3},
                                      {2, 4}, {3, 4}, {5, 7}, {6, 7}});
  ASSERT_TRUE(is_even_graph(g));
  auto s = find(g, Variant::Deg6Clique);
  ASSERT_TRUE(s);
  auto p = must_plan(g, *s);
  EXPECT_EQ(p.lift_case.tag, "clique");
  EXPECT_EQ(p.added_edges, (std::vector<Edge>{{5, 6}}));
  Graph h = apply_plan(g, p);
  EXPECT_EQ(h.n(), g.n());
  EXPECT_EQ(h.m(), g.m() - 1);
}

TEST(Plan, Deg2WithAdjacentNeighbours) {
  Graph bowtie = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
  auto ss = find_structures(bowtie);
  auto s = std::find_if(ss.begin(), ss.end(), [](const auto& x) { return x.variant == Variant::Deg24Odd && x.u == 1; });
  ASSERT_NE(s, ss.end());
  auto p = must_plan(bowtie, *s);
  EXPECT_EQ(p.lift_case.tag, "deg2.adj");
  Graph h = apply_plan(bowtie, p);
  EXPECT_EQ(h.n(), 4);
  EXPECT_EQ(h.m(), bowtie.m() - 3);
}

TEST(Plan, Deg4K4Neighbourhood) {
  // K5 has a degree-4 vertex whose neighbourhood is a clique
  Graph k5 = complete_graph(5);
  auto s = find(k5, Variant::Deg24Odd);
  ASSERT_TRUE(s);
  auto p = must_plan(k5, *s);
  EXPECT_EQ(p.lift_case.tag, "deg4.k4");
  Graph h = apply_plan(k5, p);
  EXPECT_EQ(h.n(), 4);
  EXPECT_EQ(h.m(), 4);
}

// Every plan the planner emits shrinks (n, m) and keeps the graph even.
void check_all_plans(const Graph& g) {
  for (const auto& s : find_structures(g)) {
    auto r = plan(g, s);
    if (!std::holds_alternative<ReductionPlan>(r)) continue;
    const auto& p = std::get<ReductionPlan>(r);
    Graph h = apply_plan(g, p);
    EXPECT_TRUE(is_even_graph(h)) << to_string(s.variant) << " " << p.lift_case.tag;
    EXPECT_TRUE(h.n() < g.n() || (h.n() == g.n() && h.m() < g.m())) << p.lift_case.tag;
    for (const Edge& e : p.removed_edges) EXPECT_TRUE(g.has_edge(e.u, e.v)) << p.lift_case.tag;
    for (const Edge& e : p.added_edges) EXPECT_FALSE(g.has_edge(e.u, e.v)) << p.lift_case.tag;
    EXPECT_EQ(plan(g, s).index(), r.index());
  }
}

TEST(Plan, MeasureDecreasesOnSmallGraphs) {
  for (int n = 3; n <= 8; ++n)
    for (const Graph& g : enumerate_even_connected(n)) check_all_plans(g);
}

TEST(Plan, MeasureDecreasesOnBoundedPathwidth) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) check_all_plans(random_even_bounded_pw(20 + static_cast<int>(seed % 21), 6, seed));
}

}  // namespace
}  // namespace hajos
