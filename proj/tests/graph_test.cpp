#include <sstream>

#include <gtest/gtest.h>

#include "wtc/corpus.hpp"
#include "wtc/generators.hpp"
#include "wtc/graph.hpp"
#include "wtc/graph_io.hpp"

using namespace wtc;

namespace {

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no wtc::error thrown";
  return errc::invalid_argument;
}

}  // namespace

TEST(VertexSet, BasicAlgebra) {
  VertexSet a(70, {0, 3, 69}), b(70, {3, 4});
  EXPECT_EQ(a.count(), 3u);
  EXPECT_TRUE(a.contains(69));
  EXPECT_EQ((a & b).to_vector(), (std::vector<VertexId>{3}));
  EXPECT_EQ((a | b).count(), 4u);
  EXPECT_EQ((a - b).to_string(), "0 69");
  EXPECT_EQ(a.complement().count(), 67u);
  EXPECT_TRUE(VertexSet::full(70).is_full());
  EXPECT_TRUE(VertexSet(70, {3}).is_subset_of(b));
  EXPECT_FALSE(a.is_subset_of(b));
  EXPECT_EQ(code_of([&] { a.insert(70); }), errc::vertex_out_of_range);
}

TEST(VertexSet, LexOrder) {
  EXPECT_TRUE(lex_less(VertexSet(4, {0, 3}), VertexSet(4, {1, 2})));
  EXPECT_TRUE(lex_less(VertexSet(4, {0, 1}), VertexSet(4, {0, 2})));
  EXPECT_FALSE(lex_less(VertexSet(4, {0, 2}), VertexSet(4, {0, 2})));
}

TEST(Graph, FromEdgeList) {
  auto k2 = Graph::from_edge_list(2, {{0, 1}});
  EXPECT_EQ(k2.order(), 2u);
  EXPECT_EQ(k2.edge_count(), 1u);
  EXPECT_TRUE(is_complete(k2));

  auto p4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(p4, path_graph(4));

  auto star = Graph::from_edge_list(4, {{1, 0}, {1, 2}, {1, 3}});
  EXPECT_EQ(star.degree(1), 3u);
  EXPECT_EQ(star.neighbors(1), VertexSet(4, {0, 2, 3}));
}

TEST(Graph, DuplicateEdgesCollapse) {
  auto g = Graph::from_edge_list(3, {{0, 1}, {1, 0}, {1, 2}});
  EXPECT_EQ(g.edge_count(), 2u);
}

TEST(Graph, RejectsBadInput) {
  EXPECT_EQ(code_of([] { Graph::from_edge_list(3, {{0, 3}}); }), errc::vertex_out_of_range);
  EXPECT_EQ(code_of([] { Graph::from_edge_list(3, {{1, 1}}); }), errc::self_loop);
  EXPECT_EQ(code_of([] { Graph::from_edge_list(0, {}); }), errc::empty_graph);
}

TEST(Graph, Neighborhoods) {
  auto p4 = path_graph(4);
  EXPECT_EQ(p4.neighbors(0), VertexSet(4, {1}));
  EXPECT_EQ(p4.closed_neighborhood(1), VertexSet(4, {0, 1, 2}));
}

TEST(Graph, ConnectivityPredicates) {
  EXPECT_TRUE(is_connected(path_graph(4)));
  EXPECT_FALSE(is_complete(path_graph(4)));
  EXPECT_TRUE(is_complete(complete_graph(4)));
  auto split = components_within(path_graph(4), VertexSet(4, {0, 3}));
  EXPECT_EQ(split.size(), 2u);
  auto two = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
  EXPECT_FALSE(is_connected(two));
  EXPECT_EQ(code_of([&] { require_connected(two); }), errc::disconnected);
  EXPECT_EQ(code_of([] { require_nontrivial(path_graph(1)); }), errc::trivial_graph);
  EXPECT_EQ(code_of([] { require_noncomplete(complete_graph(3)); }), errc::complete_graph);
}

TEST(Graph, DeleteVertices) {
  auto star = star_graph(3);
  auto sub = delete_vertices(star, VertexSet(4, {0}));
  EXPECT_EQ(sub.graph.order(), 3u);
  EXPECT_EQ(sub.graph.edge_count(), 0u);

  auto c5 = cycle_graph(5);
  EXPECT_EQ(delete_vertices(c5, VertexSet(5)).graph, c5);

  auto cut = delete_vertices(c5, VertexSet(5, {0, 2}));
  std::vector<VertexSet> original;
  for (const auto& comp : connected_components(cut.graph)) {
    VertexSet s(5);
    for (auto x : comp) s.insert(cut.old_of_new[x]);
    original.push_back(s);
  }
  ASSERT_EQ(original.size(), 2u);
  EXPECT_EQ(original[0], VertexSet(5, {1}));
  EXPECT_EQ(original[1], VertexSet(5, {3, 4}));
  EXPECT_EQ(cut.new_of_old[0], InducedSubgraph::removed);
}

TEST(Generators, Sizes) {
  EXPECT_EQ(path_graph(5).edge_count(), 4u);
  EXPECT_EQ(cycle_graph(5).edge_count(), 5u);
  EXPECT_EQ(complete_graph(5).edge_count(), 10u);
  EXPECT_EQ(star_graph(3).order(), 4u);
  auto bridge = two_clique_bridge(3);
  EXPECT_EQ(bridge.order(), 7u);
  EXPECT_EQ(bridge.edge_count(), 8u);
  EXPECT_EQ(bridge.name(3), "m");
  EXPECT_TRUE(bridge.adjacent(0, 3));
  EXPECT_TRUE(bridge.adjacent(3, 4));
}

TEST(Generators, SeededRandomGraphsAreDeterministicAndConnected) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto t = random_tree(9, seed);
    EXPECT_EQ(t.edge_count(), 8u);
    EXPECT_TRUE(is_connected(t));
    EXPECT_EQ(t, random_tree(9, seed));
    auto g = random_connected_graph(8, 0.2, seed);
    EXPECT_TRUE(is_connected(g));
    EXPECT_EQ(g, random_connected_graph(8, 0.2, seed));
  }
}

TEST(Graph6, FrozenEncodings) {
  EXPECT_EQ(encode_graph6(cycle_graph(5)), "Dhc");
  EXPECT_EQ(encode_graph6(path_graph(4)), "Ch");
  EXPECT_EQ(encode_graph6(complete_graph(5)), "D~{");
  EXPECT_EQ(encode_graph6(path_graph(70)).substr(0, 4), "~?@E");
}

TEST(Graph6, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = random_connected_graph(3 + seed % 9, 0.4, seed);
    EXPECT_EQ(parse_graph6(encode_graph6(g)), g);
  }
  auto big = path_graph(70);
  EXPECT_EQ(parse_graph6(encode_graph6(big)), big);
  EXPECT_EQ(parse_graph6(">>graph6<<Ch\n"), path_graph(4));
}

TEST(Graph6, RejectsMalformed) {
  EXPECT_EQ(code_of([] { parse_graph6(""); }), errc::malformed_graph6);
  EXPECT_EQ(code_of([] { parse_graph6("C"); }), errc::malformed_graph6);
  EXPECT_EQ(code_of([] { parse_graph6("Chh"); }), errc::malformed_graph6);
  EXPECT_EQ(code_of([] { parse_graph6("C!h"); }), errc::malformed_graph6);
  EXPECT_EQ(code_of([] { parse_graph6("B@"); }), errc::malformed_graph6);  // padding bit set
}

TEST(EdgeList, RoundTripAndErrors) {
  auto g = two_clique_bridge(3);
  EXPECT_EQ(parse_edge_list(write_edge_list(g)), g);
  EXPECT_EQ(code_of([] { parse_edge_list(std::string_view("3 2\n0 1\n")); }), errc::malformed_edge_list);
  EXPECT_EQ(parse_graph_text("4 3\n0 1\n1 2\n2 3\n"), path_graph(4));
  EXPECT_EQ(parse_graph_text("Ch"), path_graph(4));
}

TEST(Graph6List, SkipsCommentsAndBlankLines) {
  std::istringstream in("# corpus\nCh\n\nDhc\n");
  auto graphs = parse_graph6_list(in);
  ASSERT_EQ(graphs.size(), 2u);
  EXPECT_EQ(write_graph6_list(graphs), "Ch\nDhc\n");
}

TEST(Dot, ContainsLabelsAndEdges) {
  auto dot = write_dot(path_graph(2), [](VertexId v) { return "(0," + std::to_string(v) + ")"; });
  EXPECT_NE(dot.find("label=\"(0,1)\""), std::string::npos);
  EXPECT_NE(dot.find("0 -- 1"), std::string::npos);
}

TEST(Corpus, ConnectedGraphCountsMatchKnownSequence) {
  const std::size_t expected[] = {1, 1, 2, 6, 21, 112};
  auto all = connected_graphs_up_to(6);
  for (std::size_t n = 1; n <= 6; ++n) {
    auto count = std::count_if(all.begin(), all.end(), [&](const Graph& g) { return g.order() == n; });
    EXPECT_EQ(static_cast<std::size_t>(count), expected[n - 1]) << "n = " << n;
  }
  for (const auto& g : all) EXPECT_TRUE(is_connected(g));
  EXPECT_EQ(code_of([] { connected_graphs_up_to(8); }), errc::infeasible_spec);
}

TEST(Corpus, RandomCorpusIsSeeded) {
  auto a = random_connected_corpus(20, 7, 8, {0.3, 0.6}, 5);
  auto b = random_connected_corpus(20, 7, 8, {0.3, 0.6}, 5);
  EXPECT_EQ(a, b);
  for (const auto& g : a) {
    EXPECT_GE(g.order(), 7u);
    EXPECT_LE(g.order(), 8u);
  }
}
