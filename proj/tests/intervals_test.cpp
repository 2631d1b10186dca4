#include <gtest/gtest.h>

#include "wtc/corpus.hpp"
#include "wtc/generators.hpp"
#include "wtc/intervals.hpp"
#include "wtc/oracle.hpp"

using namespace wtc;

namespace {

// a = 0, b = 1 (centre), c = 2, d = 3.
Graph claw() { return Graph::from_edge_list(4, {{1, 0}, {1, 2}, {1, 3}}); }

}  // namespace

TEST(WeaklyToll, WorkedExamples) {
  EXPECT_EQ(weakly_toll_interval(claw(), 0, 2), VertexSet::full(4));
  EXPECT_EQ(weakly_toll_interval(path_graph(4), 0, 3), VertexSet::full(4));
  EXPECT_EQ(weakly_toll_interval(cycle_graph(5), 0, 2), VertexSet::full(5));
  EXPECT_EQ(weakly_toll_interval(path_graph(3), 0, 0), VertexSet(3, {0}));
}

TEST(WeaklyToll, AdjacentPairIsTheEdge) {
  const auto g = two_clique_bridge(3);
  for (VertexId u = 0; u < g.order(); ++u)
    for (auto v : g.neighbors(u)) EXPECT_EQ(weakly_toll_interval(g, u, v), VertexSet(g.order(), {u, v}));
}

TEST(WeaklyToll, CliqueBridge) {
  // a_2 = 1, b_2 = 5.
  EXPECT_EQ(weakly_toll_interval(two_clique_bridge(3), 1, 5), VertexSet(7, {0, 1, 3, 4, 5}));
}

// A hub joined to the far side through an extra path is still cut off:
// u-c, c-v, v-b, b-x, c-b gives WT(u,v) = {u,c,v}.
TEST(WeaklyToll, SecondHubOnTargetSideIsExcluded) {
  auto g = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 3}});
  EXPECT_EQ(weakly_toll_interval(g, 0, 2), VertexSet(5, {0, 1, 2}));
}

TEST(Toll, WorkedExamples) {
  EXPECT_EQ(toll_interval(claw(), 0, 2), VertexSet(4, {0, 1, 2}));
  EXPECT_EQ(toll_interval(path_graph(4), 0, 3), VertexSet::full(4));
  EXPECT_EQ(toll_interval(path_graph(4), 1, 2), VertexSet(4, {1, 2}));
}

TEST(SemiWeaklyToll, NonAdjacentAndAdjacent) {
  EXPECT_EQ(semi_weakly_toll_interval(path_graph(3), 0, 2), VertexSet::full(3));
  // Only the source condition applies, so an adjacent target can be
  // reached by a detour behind it.
  EXPECT_EQ(semi_weakly_toll_interval(path_graph(3), 0, 1), VertexSet::full(3));
  EXPECT_EQ(semi_weakly_toll_interval(path_graph(3), 1, 0), VertexSet(3, {0, 1}));
}

TEST(GeodesicAndMonophonic, Cycle) {
  const auto c5 = cycle_graph(5);
  EXPECT_EQ(geodesic_interval(c5, 0, 2), VertexSet(5, {0, 1, 2}));
  EXPECT_EQ(monophonic_interval(c5, 0, 2), VertexSet::full(5));
  EXPECT_EQ(geodesic_interval(cycle_graph(4), 0, 2), VertexSet::full(4));
}

TEST(Intervals, RequireConnectedGraph) {
  auto two = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(weakly_toll_interval(two, 0, 2), error);
  EXPECT_THROW(weakly_toll_interval(path_graph(3), 0, 3), error);
}

// Property: every engine interval equals the walk oracle on all small
// connected graphs, for every ordered pair.
TEST(IntervalsProperty, EnginesMatchOracleExhaustively) {
  const std::pair<IntervalKind, oracle::WalkKind> kinds[] = {
      {IntervalKind::weakly_toll, oracle::WalkKind::weakly_toll},
      {IntervalKind::semi_weakly_toll, oracle::WalkKind::semi_weakly_toll},
      {IntervalKind::toll, oracle::WalkKind::toll}};
  for (const auto& g : connected_graphs_up_to(5))
    for (VertexId u = 0; u < g.order(); ++u)
      for (VertexId v = 0; v < g.order(); ++v)
        for (auto [kind, walk] : kinds)
          ASSERT_EQ(interval(g, u, v, kind), oracle::oracle_interval(g, u, v, walk))
              << to_string(kind) << " on " << g.order() << "-vertex graph, pair " << u << "," << v;
}

// Property: geo <= mono <= toll <= wt, symmetric kinds are symmetric, and
// every interval contains its ends.
TEST(IntervalsProperty, NestingAndSymmetry) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = random_connected_graph(8, 0.3, seed);
    for (VertexId u = 0; u < g.order(); ++u)
      for (VertexId v = 0; v < g.order(); ++v) {
        const auto geo = geodesic_interval(g, u, v), mono = monophonic_interval(g, u, v);
        const auto toll = toll_interval(g, u, v), wt = weakly_toll_interval(g, u, v);
        EXPECT_TRUE(geo.is_subset_of(mono));
        EXPECT_TRUE(mono.is_subset_of(toll));
        EXPECT_TRUE(toll.is_subset_of(wt));
        EXPECT_EQ(wt, weakly_toll_interval(g, v, u));
        EXPECT_EQ(toll, toll_interval(g, v, u));
        EXPECT_TRUE(wt.contains(u) && wt.contains(v));
        EXPECT_TRUE(wt.is_subset_of(semi_weakly_toll_interval(g, u, v)));
      }
  }
}

TEST(Closure, IntervalTableAndClosure) {
  const auto g = path_graph(4);
  const auto table = interval_table(g, IntervalKind::weakly_toll);
  EXPECT_EQ(table[0][3], VertexSet::full(4));
  EXPECT_EQ(interval_closure(g, VertexSet(4, {0, 3}), IntervalKind::weakly_toll), VertexSet::full(4));
  EXPECT_TRUE(is_weakly_toll_set(g, VertexSet(4, {0, 3})));
  EXPECT_FALSE(is_weakly_toll_set(g, VertexSet(4, {0, 2})));
}
