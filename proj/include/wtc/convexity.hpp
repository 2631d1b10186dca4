#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "wtc/error.hpp"
#include "wtc/graph.hpp"
#include "wtc/intervals.hpp"

namespace wtc {

using IntervalTable = std::vector<std::vector<VertexSet>>;

namespace detail {

inline VertexSet closure_from_table(const IntervalTable& table, const VertexSet& s) {
  VertexSet out = s;
  const auto members = s.to_vector();
  for (auto a : members)
    for (auto b : members) out |= table[a][b];
  return out;
}

inline VertexSet hull_from_table(const IntervalTable& table, VertexSet s) {
  while (true) {
    auto next = closure_from_table(table, s);
    if (next == s) return s;
    s = std::move(next);
  }
}

// Calls visit on each k-subset of {0..n-1} in lexicographic order until it
// returns true; yields that subset.
inline std::optional<VertexSet> first_combination(std::size_t n, std::size_t k,
                                                  const std::function<bool(const VertexSet&)>& visit) {
  if (k > n) return std::nullopt;
  std::vector<VertexId> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    auto s = VertexSet::from_range(n, idx);
    if (visit(s)) return s;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return std::nullopt;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline void check_subset(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw error(errc::invalid_argument, "vertex set does not belong to this graph");
}

}  // namespace detail

// Every pairwise interval of S stays inside S.
inline bool is_convex(const Graph& g, const VertexSet& s, IntervalKind kind) {
  require_connected(g);
  detail::check_subset(g, s);
  const auto members = s.to_vector();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = is_ordered(kind) ? 0 : i + 1; j < members.size(); ++j)
      if (i != j && !interval(g, members[i], members[j], kind).is_subset_of(s)) return false;
  return true;
}

// Least convex superset of S: iterate the interval closure to a fixpoint.
inline VertexSet hull(const Graph& g, const VertexSet& s, IntervalKind kind) {
  require_connected(g);
  detail::check_subset(g, s);
  if (s.empty()) throw error(errc::invalid_argument, "hull of the empty set");
  auto cur = s;
  while (true) {
    auto next = interval_closure(g, cur, kind);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

struct InvariantResult {
  std::size_t number;
  VertexSet witness;  // lexicographically least among minimum sets
};

// Exact weakly toll number by increasing-cardinality subset search.
inline InvariantResult wtn(const Graph& g, const IntervalTable& table) {
  const auto n = g.order();
  for (std::size_t k = 2; k <= n; ++k) {
    auto found = detail::first_combination(
        n, k, [&](const VertexSet& s) { return detail::closure_from_table(table, s).is_full(); });
    if (found) return {k, *found};
  }
  return {n, VertexSet::full(n)};
}

inline InvariantResult wtn(const Graph& g) {
  require_connected(g);
  require_nontrivial(g);
  return wtn(g, interval_table(g, IntervalKind::weakly_toll));
}

// Exact weakly toll hull number.
inline InvariantResult wth(const Graph& g, const IntervalTable& table) {
  const auto n = g.order();
  for (std::size_t k = 2; k <= n; ++k) {
    auto found = detail::first_combination(
        n, k, [&](const VertexSet& s) { return detail::hull_from_table(table, s).is_full(); });
    if (found) return {k, *found};
  }
  return {n, VertexSet::full(n)};
}

inline InvariantResult wth(const Graph& g) {
  require_connected(g);
  require_nontrivial(g);
  return wth(g, interval_table(g, IntervalKind::weakly_toll));
}

// Interval of a pair together with the parts of V it misses:
// X = V \ W, X_u = N[u] \ W, X_v = N[v] \ W.
struct IntervalReport {
  VertexId u;
  VertexId v;
  VertexSet interval;
  VertexSet x;
  VertexSet x_u;
  VertexSet x_v;
  bool is_maximum = false;
};

inline IntervalReport make_report(const Graph& g, VertexId u, VertexId v, VertexSet w, bool is_maximum) {
  IntervalReport r{u, v, w, w.complement(), g.closed_neighborhood(u) - w, g.closed_neighborhood(v) - w, is_maximum};
  return r;
}

inline IntervalReport interval_report(const Graph& g, VertexId u, VertexId v) {
  return make_report(g, u, v, weakly_toll_interval(g, u, v), false);
}

// All pairs u < v whose weakly toll interval has maximum size.
inline std::vector<IntervalReport> maximum_interval_pairs(const Graph& g, const IntervalTable& table) {
  require_noncomplete(g);
  const auto n = g.order();
  std::size_t best = 0;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) best = std::max(best, table[u][v].count());
  std::vector<IntervalReport> out;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (table[u][v].count() == best) out.push_back(make_report(g, u, v, table[u][v], true));
  return out;
}

inline std::vector<IntervalReport> maximum_interval_pairs(const Graph& g) {
  require_connected(g);
  require_noncomplete(g);
  return maximum_interval_pairs(g, interval_table(g, IntervalKind::weakly_toll));
}

// For non-adjacent u, v: a vertex outside N[u] | N[v] with a neighbour in
// WT(u,v) \ {u,v} lies in WT(u,v).
inline bool check_neighbor_extension(const Graph& g, const IntervalTable& table) {
  const auto n = g.order();
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v)) continue;
      const auto& w = table[u][v];
      auto inner = w;
      inner.erase(u);
      inner.erase(v);
      const auto outside = (g.closed_neighborhood(u) | g.closed_neighborhood(v)).complement();
      for (auto x : outside)
        if (g.neighbors(x).intersects(inner) && !w.contains(x)) return false;
    }
  return true;
}

inline bool check_neighbor_extension(const Graph& g) {
  require_connected(g);
  return check_neighbor_extension(g, interval_table(g, IntervalKind::weakly_toll));
}

namespace detail {
// Maximum over all pairs is attained by a non-adjacent pair whenever G is
// connected and not complete: adjacent pairs give 2, non-adjacent ones at
// least 3 (a shortest path).
inline void assert_maximum_nonadjacent(const Graph& g, const std::vector<IntervalReport>& reports) {
  for (const auto& r : reports)
    if (!g.adjacent(r.u, r.v)) return;
  throw error(errc::invalid_argument, "maximum interval attained only by adjacent pairs");
}
}  // namespace detail

// At every maximum pair with non-adjacent ends, X_u and X_v are disjoint
// and cover X.
inline bool check_max_interval_decomposition(const Graph& g, const IntervalTable& table) {
  const auto reports = maximum_interval_pairs(g, table);
  detail::assert_maximum_nonadjacent(g, reports);
  for (const auto& r : reports) {
    if (g.adjacent(r.u, r.v)) continue;
    if (r.x_u.intersects(r.x_v) || (r.x_u | r.x_v) != r.x) return false;
  }
  return true;
}

inline bool check_max_interval_decomposition(const Graph& g) {
  require_connected(g);
  require_noncomplete(g);
  return check_max_interval_decomposition(g, interval_table(g, IntervalKind::weakly_toll));
}

// wtn(G) > 2 exactly when every maximum non-adjacent pair has X_u | X_v
// non-empty.
inline bool check_wtn_two_criterion(const Graph& g, const IntervalTable& table) {
  const auto reports = maximum_interval_pairs(g, table);
  detail::assert_maximum_nonadjacent(g, reports);
  bool all_missing = true;
  for (const auto& r : reports)
    if (!g.adjacent(r.u, r.v) && (r.x_u | r.x_v).empty()) all_missing = false;
  const bool wtn_above_two = wtn(g, table).number > 2;
  return wtn_above_two == all_missing;
}

inline bool check_wtn_two_criterion(const Graph& g) {
  require_connected(g);
  require_noncomplete(g);
  return check_wtn_two_criterion(g, interval_table(g, IntervalKind::weakly_toll));
}

}  // namespace wtc
