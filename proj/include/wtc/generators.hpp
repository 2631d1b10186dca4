#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wtc/error.hpp"
#include "wtc/graph.hpp"

namespace wtc {

namespace detail {
inline void require_size(std::size_t k, std::size_t min, const char* what) {
  if (k < min)
    throw error(errc::invalid_argument, std::string(what) + " needs k >= " + std::to_string(min) + ", got " +
                                            std::to_string(k));
}
}  // namespace detail

inline Graph path_graph(std::size_t k) {
  detail::require_size(k, 1, "path_graph");
  std::vector<Edge> edges;
  for (VertexId i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edge_list(k, edges);
}

inline Graph cycle_graph(std::size_t k) {
  detail::require_size(k, 3, "cycle_graph");
  std::vector<Edge> edges;
  for (VertexId i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  return Graph::from_edge_list(k, edges);
}

inline Graph complete_graph(std::size_t k) {
  detail::require_size(k, 1, "complete_graph");
  std::vector<Edge> edges;
  for (VertexId i = 0; i < k; ++i)
    for (VertexId j = i + 1; j < k; ++j) edges.emplace_back(i, j);
  return Graph::from_edge_list(k, edges);
}

// K_{1,k}: center 0, leaves 1..k.
inline Graph star_graph(std::size_t k) {
  detail::require_size(k, 1, "star_graph");
  std::vector<Edge> edges;
  for (VertexId i = 1; i <= k; ++i) edges.emplace_back(0, i);
  return Graph::from_edge_list(k + 1, edges);
}

// Uniform random recursive tree: vertex i attaches to a uniform earlier vertex.
inline Graph random_tree(std::size_t k, std::uint64_t seed) {
  detail::require_size(k, 1, "random_tree");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (VertexId i = 1; i < k; ++i) edges.emplace_back(std::uniform_int_distribution<VertexId>(0, i - 1)(rng), i);
  return Graph::from_edge_list(k, edges);
}

// G(k, p), then components are chained by one random edge each until connected.
inline Graph random_connected_graph(std::size_t k, double p, std::uint64_t seed) {
  detail::require_size(k, 1, "random_connected_graph");
  if (!(p >= 0.0 && p <= 1.0)) throw error(errc::invalid_argument, "edge probability must lie in [0,1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (VertexId i = 0; i < k; ++i)
    for (VertexId j = i + 1; j < k; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  const auto comps = connected_components(Graph::from_edge_list(k, edges));
  auto pick = [&](const VertexSet& s) {
    auto members = s.to_vector();
    return members[std::uniform_int_distribution<std::size_t>(0, members.size() - 1)(rng)];
  };
  for (std::size_t c = 1; c < comps.size(); ++c) edges.emplace_back(pick(comps[c - 1]), pick(comps[c]));
  return Graph::from_edge_list(k, edges);
}

// Two copies of K_k whose first vertices are joined through a middle vertex.
// Layout: a_1..a_k = 0..k-1, m = k, b_1..b_k = k+1..2k.
inline Graph two_clique_bridge(std::size_t k) {
  detail::require_size(k, 1, "two_clique_bridge");
  std::vector<Edge> edges;
  std::vector<std::string> names;
  const VertexId mid = k;
  for (VertexId i = 0; i < k; ++i)
    for (VertexId j = i + 1; j < k; ++j) {
      edges.emplace_back(i, j);
      edges.emplace_back(mid + 1 + i, mid + 1 + j);
    }
  edges.emplace_back(0, mid);
  edges.emplace_back(mid, mid + 1);
  for (std::size_t i = 1; i <= k; ++i) names.push_back("a" + std::to_string(i));
  names.emplace_back("m");
  for (std::size_t i = 1; i <= k; ++i) names.push_back("b" + std::to_string(i));
  return Graph::from_edge_list(2 * k + 1, edges, std::move(names));
}

}  // namespace wtc
