#include "hajos/colouring.hpp"

#include <gtest/gtest.h>

#include "hajos/corpus.hpp"

namespace hajos {
namespace {

Graph bowtie() { return Graph::from_edge_list(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}}); }

Colouring k5_pair() {
  Colouring c(5);
  c.set_cycle({0, 1, 2, 3, 4}, 1);
  c.set_cycle({0, 2, 4, 1, 3}, 2);
  return c;
}

TEST(Colouring, BasicAccess) {
  Colouring c = k5_pair();
  EXPECT_EQ(c(1, 0), 1);
  EXPECT_EQ(c.colour(0, 2), 2);
  EXPECT_EQ(c.colour(0, 7), 0);
  EXPECT_EQ(c.colour_count(), 2);
  EXPECT_EQ(c.bound(), 2);
  EXPECT_TRUE(c.touches(3, 2));
  EXPECT_EQ(c.class_edges(1).size(), 5u);
}

TEST(VerifyLegal, AcceptsK5Pair) {
  auto v = verify_legal(complete_graph(5), k5_pair());
  EXPECT_TRUE(v.ok);
  EXPECT_TRUE(v.violations.empty());
}

TEST(VerifyLegal, ReportsEachViolation) {
  Graph k5 = complete_graph(5);
  Colouring c = k5_pair();
  c.erase(0, 1);
  auto v = verify_legal(k5, c);
  EXPECT_FALSE(v.ok);
  EXPECT_TRUE(v.has(ViolationKind::UncolouredEdge));
  EXPECT_TRUE(v.has(ViolationKind::NotACycle));

  c = k5_pair();
  c.set_cycle({0, 1, 2, 3, 4}, 3);
  EXPECT_TRUE(verify_legal(k5, c).has(ViolationKind::ColourOutOfRange));

  Graph c5 = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  EXPECT_TRUE(verify_legal(c5, k5_pair()).has(ViolationKind::UnknownEdge));
}

TEST(VerifyLegal, ClassOfTwoCyclesIsNotACycle) {
  Colouring c(5);
  c.set_cycle({0, 1, 2}, 1);
  c.set_cycle({0, 3, 4}, 1);
  auto v = verify_legal(bowtie(), c);
  ASSERT_EQ(v.violations.size(), 1u);
  EXPECT_EQ(v.violations[0].describe(), "NotACycle(1)");
}

TEST(CanonicalCycle, MinFirstSmallerNeighbourNext) {
  EXPECT_EQ(canonical_cycle({3, 1, 4, 2}), (std::vector<Vertex>{1, 3, 2, 4}));
  EXPECT_EQ(canonical_cycle({2, 0, 1}), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(colour_class_cycle(k5_pair(), 2), (std::vector<Vertex>{0, 2, 4, 1, 3}));
  EXPECT_THROW(colour_class_cycle(k5_pair(), 3), ColouringError);
}

TEST(CycleArcs, BothOrientedFromAToB) {
  auto [p, q] = cycle_arcs({0, 1, 2, 3, 4, 5}, 1, 4);
  EXPECT_EQ(p, (std::vector<Vertex>{1, 2, 3, 4}));
  EXPECT_EQ(q, (std::vector<Vertex>{1, 0, 5, 4}));
  EXPECT_THROW(cycle_arcs({0, 1, 2}, 0, 7), ColouringError);
}

TEST(PathAlongCycle, UniqueBothOrNeither) {
  Colouring c(6);
  c.set_cycle({0, 1, 2, 3, 4, 5}, 1);
  auto r = path_along_cycle(c, 1, 0, 3, VertexSet{1});
  ASSERT_TRUE(r);
  EXPECT_EQ(r.path, (std::vector<Vertex>{0, 5, 4, 3}));
  EXPECT_EQ(path_along_cycle(c, 1, 0, 3, VertexSet{}).kind, ArcKind::BothArcsQualify);
  EXPECT_EQ(path_along_cycle(c, 1, 0, 3, VertexSet{1, 4}).kind, ArcKind::Neither);
  // endpoints themselves may be forbidden
  EXPECT_EQ(path_along_cycle(c, 1, 0, 3, VertexSet{0, 3, 2}).path, (std::vector<Vertex>{0, 5, 4, 3}));
}

TEST(Renormalize, OrdersBySmallestEdge) {
  Colouring c(5);
  c.set_cycle({0, 3, 4}, 7);
  c.set_cycle({0, 1, 2}, 4);
  Colouring r = renormalize(c);
  EXPECT_EQ(r(0, 1), 1);
  EXPECT_EQ(r(0, 3), 2);
  EXPECT_EQ(r.colours(), (std::set<int>{1, 2}));
}

TEST(Decomposition, RoundTrip) {
  Graph k5 = complete_graph(5);
  auto d = to_decomposition(k5_pair());
  EXPECT_EQ(d.n, 5);
  ASSERT_EQ(d.cycles.size(), 2u);
  EXPECT_TRUE(verify_decomposition(k5, d).ok);
  EXPECT_EQ(from_decomposition(d, 5), k5_pair());
  d.cycles.push_back({0, 1, 2});
  EXPECT_THROW(from_decomposition(d, 5), ColouringError);
}

TEST(VerifyDecomposition, Violations) {
  Graph k5 = complete_graph(5);
  CycleDecomposition d{5, {{0, 1, 2, 3, 4}}};
  EXPECT_TRUE(verify_decomposition(k5, d).has(ViolationKind::UncolouredEdge));
  d.cycles = {{0, 1, 2, 3, 4}, {0, 2, 4, 1, 3}, {0, 1, 2}};
  auto v = verify_decomposition(k5, d);
  EXPECT_TRUE(v.has(ViolationKind::EdgeCoveredTwice));
  EXPECT_TRUE(v.has(ViolationKind::TooManyCycles));
  d.cycles = {{0, 1, 0}};
  EXPECT_TRUE(verify_decomposition(k5, d).has(ViolationKind::NotACycle));
}

// K5 on 0..4 padded with isolated vertices so the bound allows four colours.
TEST(RepairMonoTriangle, PathFlip) {
  std::vector<std::pair<Vertex, Vertex>> es;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) es.emplace_back(a, b);
  Graph h = Graph::from_edge_list(9, es);
  Colouring c(9);
  c.set_cycle({0, 1, 2}, 1);
  c.set_cycle({0, 3, 4}, 2);
  c.set_cycle({1, 3, 2, 4}, 3);
  ASSERT_TRUE(verify_legal(h, c).ok);
  auto r = repair_mono_triangle(h, c, 0, 1, 2, 3);
  EXPECT_EQ(r.branch, RepairBranch::PathFlip);
  EXPECT_TRUE(verify_legal(h, r.colouring).ok);
  EXPECT_FALSE(r.colouring(0, 1) == r.colouring(1, 2) && r.colouring(1, 2) == r.colouring(0, 2));
  EXPECT_EQ(r.colouring.colour_count(), 3);
}

TEST(RepairMonoTriangle, ColourElimination) {
  Graph h = Graph::from_edge_list(
      9, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {2, 3}, {3, 4}, {0, 4}, {3, 5}, {1, 5}, {3, 6}, {2, 6}});
  Colouring c(9);
  c.set_cycle({0, 1, 2}, 1);
  c.set_cycle({0, 3, 4}, 2);
  c.set_cycle({1, 3, 5}, 3);
  c.set_cycle({2, 3, 6}, 4);
  ASSERT_TRUE(verify_legal(h, c).ok);
  auto r = repair_mono_triangle(h, c, 0, 1, 2, 3);
  EXPECT_EQ(r.branch, RepairBranch::ColourElimination);
  EXPECT_TRUE(verify_legal(h, r.colouring).ok);
  EXPECT_EQ(r.colouring.colour_count(), 3);
}

TEST(RepairMonoTriangle, UnchangedAndErrors) {
  Graph k5 = complete_graph(5);
  auto r = repair_mono_triangle(k5, k5_pair(), 0, 1, 2, 3);
  EXPECT_EQ(r.branch, RepairBranch::Unchanged);
  EXPECT_EQ(r.colouring, k5_pair());
  EXPECT_THROW(repair_mono_triangle(bowtie(), Colouring(5), 0, 1, 2, 3), ColouringError);
}

TEST(SplitTwoCycleClass, MovesCycleWithoutSmallestEdge) {
  Colouring c(5);
  c.set_cycle({0, 1, 2}, 1);
  c.set_cycle({0, 3, 4}, 1);
  Colouring s = split_two_cycle_class(c, 1);
  EXPECT_EQ(s(0, 1), 1);
  EXPECT_EQ(s(3, 4), 2);
  EXPECT_TRUE(verify_legal(bowtie(), s).ok);
  EXPECT_THROW(split_two_cycle_class(k5_pair(), 1), ColouringError);
}

}  // namespace
}  // namespace hajos
