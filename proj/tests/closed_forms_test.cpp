#include <random>

#include <gtest/gtest.h>

#include "wtc/closed_forms.hpp"
#include "wtc/generators.hpp"
#include "wtc/products.hpp"

using namespace wtc;

namespace {

// Interval of two product vertices, and the prediction for it.
void expect_prediction(const Prediction& p, const Graph& product, VertexId x, VertexId y) {
  ASSERT_TRUE(p.applicable) << p.reason;
  EXPECT_EQ(*p.set, weakly_toll_interval(product, x, y)) << p.statement;
}

}  // namespace

TEST(Lexicographic, SameLayerExamples) {
  const auto g = path_graph(3), p3 = path_graph(3), bridge = two_clique_bridge(3);
  auto leaves = lex_interval_same_layer(g, p3, 1, 0, 2);
  ASSERT_TRUE(leaves.applicable);
  EXPECT_TRUE(leaves.set->is_full());

  // Layer g = 1; a_2 = 1, b_2 = 5 misses only a_3 = 2 and b_3 = 6.
  auto p = lex_interval_same_layer(g, bridge, 1, 1, 5);
  ASSERT_TRUE(p.applicable);
  EXPECT_EQ(p.set->complement(), VertexSet(21, {7 + 2, 7 + 6}));
  expect_prediction(p, lexicographic(g, bridge).graph(), 7 + 1, 7 + 5);

  EXPECT_FALSE(lex_interval_same_layer(g, p3, 0, 0, 1).applicable);
  EXPECT_FALSE(lex_interval_same_layer(g, complete_graph(3), 0, 0, 1).applicable);
}

TEST(Lexicographic, CrossLayerExamples) {
  const auto g = path_graph(3), h = path_graph(3);
  const auto prod = lexicographic(g, h);
  for (VertexId h1 : {0, 2})
    for (VertexId h2 : {0, 2}) {
      auto p = lex_interval_cross_layer(g, h, 0, h1, 2, h2);
      expect_prediction(p, prod.graph(), prod.pair_vertex(0, h1), prod.pair_vertex(2, h2));
      // The middle of both end layers is excluded.
      EXPECT_FALSE(p.set->contains(prod.pair_vertex(0, 1)));
      EXPECT_FALSE(p.set->contains(prod.pair_vertex(2, 1)));
      EXPECT_EQ(p.set->count(), 7u);
    }
  EXPECT_FALSE(lex_interval_cross_layer(g, h, 0, 0, 1, 0).applicable);
}

TEST(Lexicographic, Invariants) {
  EXPECT_EQ(lex_wtn(path_graph(3), path_graph(3)).number, 2u);
  EXPECT_EQ(lex_wtn(path_graph(3), two_clique_bridge(3)).number, 3u);
  EXPECT_EQ(lex_wth(path_graph(3), two_clique_bridge(3)).number, 2u);
  EXPECT_EQ(wtn(lexicographic(path_graph(3), two_clique_bridge(3)).graph()).number, 3u);
  EXPECT_EQ(wtn(lexicographic(path_graph(3), path_graph(3)).graph()).number, 2u);
  EXPECT_FALSE(lex_wtn(complete_graph(3), path_graph(3)).applicable);
}

TEST(Corona, SameCopyExamples) {
  const auto g = path_graph(3), bridge = two_clique_bridge(3);
  const auto prod = corona(g, bridge);
  auto p = corona_interval_same_copy(g, bridge, 1, 1, 5);
  ASSERT_TRUE(p.applicable);
  EXPECT_EQ(p.set->complement(), VertexSet(24, {prod.copy_vertex(1, 2), prod.copy_vertex(1, 6)}));
  expect_prediction(p, prod.graph(), prod.copy_vertex(1, 1), prod.copy_vertex(1, 5));

  const auto h = path_graph(3);
  const auto pp = corona(g, h);
  auto leaves = corona_interval_same_copy(g, h, 0, 0, 2);
  ASSERT_TRUE(leaves.applicable);
  EXPECT_TRUE(leaves.set->is_full());
}

TEST(Corona, CrossCopiesExample) {
  const auto g = path_graph(3), h = path_graph(3);
  const auto prod = corona(g, h);
  auto p = corona_interval_cross_copies(g, h, 0, 0, 1, 0);
  expect_prediction(p, prod.graph(), prod.copy_vertex(0, 0), prod.copy_vertex(1, 0));
  EXPECT_EQ(p.set->complement(), VertexSet(12, {prod.copy_vertex(0, 1), prod.copy_vertex(1, 1)}));
}

TEST(Corona, BasePairExamples) {
  const auto g = path_graph(3), h = path_graph(3);
  const auto prod = corona(g, h);
  auto ends = corona_interval_base_pair(g, h, 0, 2);
  expect_prediction(ends, prod.graph(), 0, 2);
  EXPECT_EQ(*ends.set, VertexSet(12, {0, 1, 2}) | prod.corona_copy(1));

  auto adjacent = corona_interval_base_pair(g, h, 0, 1);
  expect_prediction(adjacent, prod.graph(), 0, 1);
  EXPECT_EQ(*adjacent.set, VertexSet(12, {0, 1}));
}

TEST(Corona, MixedExamples) {
  const auto g = path_graph(3), h = path_graph(3);
  const auto prod = corona(g, h);
  auto same = corona_interval_mixed(g, h, 1, 1, 0);
  expect_prediction(same, prod.graph(), 1, prod.copy_vertex(1, 0));
  EXPECT_EQ(same.set->count(), 2u);

  auto far = corona_interval_mixed(g, h, 0, 2, 1);
  expect_prediction(far, prod.graph(), 0, prod.copy_vertex(2, 1));
  EXPECT_EQ(*far.set, VertexSet(12, {0, 1, 2, prod.copy_vertex(2, 1)}) | prod.corona_copy(1));

  // Adjacent base vertices: the walk may run through the whole far side.
  auto adjacent = corona_interval_mixed(g, h, 1, 2, 0);
  expect_prediction(adjacent, prod.graph(), 1, prod.copy_vertex(2, 0));
}

TEST(Corona, BaseRestriction) {
  const auto g = cycle_graph(5), h = path_graph(3);
  const auto prod = corona(g, h);
  auto p = corona_base_restriction(g, h, 0, 2);
  ASSERT_TRUE(p.applicable);
  EXPECT_EQ(*p.set, weakly_toll_interval(prod.graph(), 0, 2) & prod.base_vertices());
  EXPECT_FALSE(corona_base_restriction(g, h, 0, 1).applicable);
}

TEST(Corona, Invariants) {
  EXPECT_EQ(corona_wtn(path_graph(3), path_graph(3)).number, 2u);
  EXPECT_EQ(corona_wtn(path_graph(3), two_clique_bridge(3)).number, 3u);
  EXPECT_EQ(wtn(corona(path_graph(3), path_graph(3)).graph()).number, 2u);
  EXPECT_EQ(wtn(corona(path_graph(3), two_clique_bridge(3)).graph()).number, 3u);
  EXPECT_EQ(wth(corona(path_graph(3), two_clique_bridge(3)).graph()).number, 2u);
}

TEST(GeneralizedCorona, Predictions) {
  const auto g = path_graph(3);
  const auto paw = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  auto exact = generalized_corona_wtn(g, {complete_graph(2), path_graph(3), paw});
  ASSERT_TRUE(exact.applicable);
  EXPECT_EQ(exact.target, PredictionTarget::wtn);
  EXPECT_EQ(exact.number, 2u);

  auto bound = generalized_corona_wtn(g, {complete_graph(2), paw, complete_graph(1)});
  ASSERT_TRUE(bound.applicable);
  EXPECT_EQ(bound.target, PredictionTarget::wtn_upper_bound);
  const auto observed = wtn(generalized_corona(g, {complete_graph(2), paw, complete_graph(1)}).graph()).number;
  EXPECT_TRUE(bound.holds_for(observed));

  // A complete attached graph gives no guarantee even with wtn 2.
  EXPECT_FALSE(generalized_corona_wtn(g, {complete_graph(2), complete_graph(2), complete_graph(2)}).applicable);
  EXPECT_FALSE(generalized_corona_wtn(path_graph(1), {path_graph(3)}).applicable);
}

TEST(CartesianStrong, Examples) {
  EXPECT_EQ(wtn(cartesian(path_graph(3), path_graph(3)).graph()).number, 2u);
  EXPECT_EQ(wtn(cartesian(complete_graph(2), complete_graph(2)).graph()).number, 2u);
  auto bound = strong_wtn_bound(path_graph(3), path_graph(3));
  ASSERT_TRUE(bound.applicable);
  EXPECT_TRUE(bound.holds_for(wtn(strong(path_graph(3), path_graph(3)).graph()).number));
  EXPECT_FALSE(strong_wtn_bound(complete_graph(3), path_graph(3)).applicable);
  EXPECT_FALSE(cartesian_wtn(path_graph(1), path_graph(3)).applicable);
}

// Property: predictions are pure functions of their inputs.
TEST(ClosedFormsProperty, Deterministic) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 20; ++k) {
    const auto g = random_connected_graph(4, 0.4, rng()), h = random_connected_graph(4, 0.4, rng());
    const auto a = corona_interval_mixed(g, h, 0, 3, 1), b = corona_interval_mixed(g, h, 0, 3, 1);
    EXPECT_EQ(a.applicable, b.applicable);
    if (a.applicable) {
      EXPECT_EQ(*a.set, *b.set);
    }
  }
}
