#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "wtc/error.hpp"
#include "wtc/generators.hpp"
#include "wtc/graph.hpp"

namespace wtc {

namespace detail {

// Bit index of pair (i, j), i < j, in graph6 column order.
inline std::size_t pair_bit(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return j * (j - 1) / 2 + i;
}

inline bool mask_connected(std::size_t n, std::uint32_t mask) {
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (!((frontier >> x) & 1U)) continue;
      for (std::size_t y = 0; y < n; ++y)
        if (y != x && ((mask >> pair_bit(x, y)) & 1U)) next |= 1U << y;
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1U << n) - 1;
}

inline Graph graph_from_mask(std::size_t n, std::uint32_t mask) {
  std::vector<Edge> edges;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if ((mask >> pair_bit(i, j)) & 1U) edges.emplace_back(i, j);
  return Graph::from_edge_list(n, edges);
}

}  // namespace detail

// One representative per isomorphism class of connected graphs on
// 1..max_n vertices: the labelling whose adjacency bit mask is smallest
// over all vertex permutations. Ordered by order, then mask.
inline std::vector<Graph> connected_graphs_up_to(std::size_t max_n) {
  if (max_n > 7) throw error(errc::infeasible_spec, "exhaustive generation is limited to 7 vertices");
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    // For each permutation, the image of every pair bit.
    std::vector<std::vector<std::size_t>> images;
    do {
      std::vector<std::size_t> img(pairs);
      for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) img[detail::pair_bit(i, j)] = detail::pair_bit(perm[i], perm[j]);
      images.push_back(std::move(img));
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
      if (!detail::mask_connected(n, mask)) continue;
      bool canonical = true;
      for (const auto& img : images) {
        std::uint32_t relabelled = 0;
        for (std::size_t b = 0; b < pairs; ++b)
          if ((mask >> b) & 1U) relabelled |= std::uint32_t{1} << img[b];
        if (relabelled < mask) {
          canonical = false;
          break;
        }
      }
      if (canonical) out.push_back(detail::graph_from_mask(n, mask));
    }
  }
  return out;
}

// Seeded random connected graphs with orders in [min_n, max_n]; the edge
// probability cycles through `probabilities`.
inline std::vector<Graph> random_connected_corpus(std::size_t count, std::size_t min_n, std::size_t max_n,
                                                  const std::vector<double>& probabilities, std::uint64_t seed) {
  if (min_n < 1 || min_n > max_n || probabilities.empty())
    throw error(errc::invalid_argument, "bad random corpus parameters");
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const auto n = std::uniform_int_distribution<std::size_t>(min_n, max_n)(rng);
    out.push_back(random_connected_graph(n, probabilities[k % probabilities.size()], rng()));
  }
  return out;
}

}  // namespace wtc
