#include <gtest/gtest.h>

#include "wtc/generators.hpp"
#include "wtc/oracle.hpp"

using namespace wtc;
using oracle::WalkKind;

TEST(Oracle, ClawWalks) {
  const auto g = Graph::from_edge_list(4, {{1, 0}, {1, 2}, {1, 3}});
  // a, b, d, b, c is weakly toll but not tolled.
  EXPECT_EQ(oracle::oracle_interval(g, 0, 2, WalkKind::weakly_toll), VertexSet::full(4));
  EXPECT_EQ(oracle::oracle_interval(g, 0, 2, WalkKind::toll), VertexSet(4, {0, 1, 2}));
}

TEST(Oracle, ShortBudgetMissesLongDetours) {
  // In the claw the detour through d needs 4 edges.
  const auto g = Graph::from_edge_list(4, {{1, 0}, {1, 2}, {1, 3}});
  EXPECT_EQ(oracle::oracle_interval(g, 0, 2, WalkKind::weakly_toll, oracle::WalkBudget(3)), VertexSet(4, {0, 1, 2}));
  EXPECT_EQ(oracle::oracle_interval(g, 0, 2, WalkKind::weakly_toll, oracle::WalkBudget(4)), VertexSet::full(4));
  EXPECT_THROW(oracle::WalkBudget(0), error);
}

TEST(Oracle, TrivialPairs) {
  const auto g = path_graph(3);
  EXPECT_EQ(oracle::oracle_interval(g, 1, 1, WalkKind::weakly_toll), VertexSet(3, {1}));
  EXPECT_EQ(oracle::oracle_interval(g, 0, 1, WalkKind::weakly_toll), VertexSet(3, {0, 1}));
  EXPECT_EQ(oracle::oracle_interval(g, 0, 1, WalkKind::semi_weakly_toll), VertexSet::full(3));
}

TEST(Oracle, FrozenInvariants) {
  EXPECT_EQ(oracle::oracle_wtn(complete_graph(4)).number, 4u);
  EXPECT_EQ(oracle::oracle_wtn(cycle_graph(5)).number, 2u);
  EXPECT_EQ(oracle::oracle_wtn(two_clique_bridge(3)).number, 4u);
  EXPECT_EQ(oracle::oracle_wth(two_clique_bridge(3)).number, 4u);
}

TEST(Oracle, HullByIntersection) {
  // a_2 = 1, b_2 = 5; hull {a_1, a_2, m, b_1, b_2}.
  EXPECT_EQ(oracle::oracle_hull(two_clique_bridge(3), VertexSet(7, {1, 5})), VertexSet(7, {0, 1, 3, 4, 5}));
}
