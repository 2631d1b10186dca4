#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wtc/error.hpp"
#include "wtc/vertex_set.hpp"

namespace wtc {

using Edge = std::pair<VertexId, VertexId>;

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  // Duplicate edges (in either orientation) are collapsed.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges, std::vector<std::string> names = {}) {
    if (n == 0) throw error(errc::empty_graph, "a graph needs at least one vertex");
    if (!names.empty() && names.size() != n)
      throw error(errc::invalid_argument, "expected " + std::to_string(n) + " vertex names");
    Graph g;
    g.rows_.assign(n, VertexSet(n));
    for (const auto& [a, b] : edges) {
      if (a >= n || b >= n)
        throw error(errc::vertex_out_of_range,
                    "edge (" + std::to_string(a) + "," + std::to_string(b) + ") with n=" + std::to_string(n));
      if (a == b) throw error(errc::self_loop, "loop at vertex " + std::to_string(a));
      g.rows_[a].insert(b);
      g.rows_[b].insert(a);
    }
    g.lists_.resize(n);
    for (VertexId v = 0; v < n; ++v) {
      g.lists_[v] = g.rows_[v].to_vector();
      g.edge_count_ += g.lists_[v].size();
    }
    g.edge_count_ /= 2;
    g.names_ = std::move(names);
    return g;
  }
  static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const noexcept { return rows_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool adjacent(VertexId u, VertexId v) const {
    check(u);
    return rows_[u].contains(v);
  }
  const VertexSet& neighbors(VertexId v) const {
    check(v);
    return rows_[v];
  }
  VertexSet closed_neighborhood(VertexId v) const {
    auto s = neighbors(v);
    s.insert(v);
    return s;
  }
  std::span<const VertexId> adjacency_list(VertexId v) const {
    check(v);
    return lists_[v];
  }
  std::size_t degree(VertexId v) const { return adjacency_list(v).size(); }

  // Sorted (u < v) edge list.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < order(); ++u)
      for (auto v : lists_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool has_names() const noexcept { return !names_.empty(); }
  std::string name(VertexId v) const {
    check(v);
    return names_.empty() ? std::to_string(v) : names_[v];
  }

  void check(VertexId v) const {
    if (v >= order())
      throw error(errc::vertex_out_of_range,
                  "vertex " + std::to_string(v) + " not in graph of order " + std::to_string(order()));
  }

  // Structural equality on the same labelled vertex set; names are ignored.
  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  std::vector<VertexSet> rows_;
  std::vector<std::vector<VertexId>> lists_;
  std::vector<std::string> names_;
  std::size_t edge_count_ = 0;
};

// Vertices reachable from `start` using only vertices of `allowed`.
// `start` itself must be allowed, otherwise the result is empty.
inline VertexSet component_within(const Graph& g, const VertexSet& allowed, VertexId start) {
  VertexSet seen(g.order());
  if (!allowed.contains(start)) return seen;
  std::deque<VertexId> queue{start};
  seen.insert(start);
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (auto y : g.adjacency_list(x)) {
      if (allowed.contains(y) && !seen.contains(y)) {
        seen.insert(y);
        queue.push_back(y);
      }
    }
  }
  return seen;
}

// Components of the subgraph induced by `allowed`, ordered by smallest member.
inline std::vector<VertexSet> components_within(const Graph& g, const VertexSet& allowed) {
  std::vector<VertexSet> out;
  VertexSet covered(g.order());
  for (auto v : allowed) {
    if (covered.contains(v)) continue;
    auto comp = component_within(g, allowed, v);
    covered |= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
  return components_within(g, VertexSet::full(g.order()));
}

inline bool is_connected(const Graph& g) { return component_within(g, VertexSet::full(g.order()), 0).is_full(); }

inline bool is_complete(const Graph& g) {
  const auto n = g.order();
  return g.edge_count() == n * (n - 1) / 2;
}

inline void require_connected(const Graph& g) {
  if (!is_connected(g)) throw error(errc::disconnected, "graph is not connected");
}
inline void require_nontrivial(const Graph& g) {
  if (g.order() < 2) throw error(errc::trivial_graph, "graph needs at least two vertices");
}
inline void require_noncomplete(const Graph& g) {
  if (is_complete(g)) throw error(errc::complete_graph, "graph is complete");
}

struct InducedSubgraph {
  Graph graph;
  std::vector<VertexId> old_of_new;
  // Entry is `removed` for deleted vertices.
  std::vector<VertexId> new_of_old;
  static constexpr VertexId removed = static_cast<VertexId>(-1);
};

// Induced subgraph on V \ removed. Deleting every vertex is rejected since
// graphs are never empty.
inline InducedSubgraph delete_vertices(const Graph& g, const VertexSet& removed) {
  if (removed.universe() != g.order())
    throw error(errc::invalid_argument, "vertex set does not belong to this graph");
  InducedSubgraph out;
  out.new_of_old.assign(g.order(), InducedSubgraph::removed);
  for (VertexId v = 0; v < g.order(); ++v) {
    if (removed.contains(v)) continue;
    out.new_of_old[v] = out.old_of_new.size();
    out.old_of_new.push_back(v);
  }
  std::vector<Edge> edges;
  std::vector<std::string> names;
  for (auto [a, b] : g.edges())
    if (!removed.contains(a) && !removed.contains(b)) edges.emplace_back(out.new_of_old[a], out.new_of_old[b]);
  if (g.has_names())
    for (auto v : out.old_of_new) names.push_back(g.name(v));
  out.graph = Graph::from_edge_list(out.old_of_new.size(), edges, std::move(names));
  return out;
}

}  // namespace wtc
