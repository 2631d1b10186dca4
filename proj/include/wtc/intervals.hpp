#pragma once

#include <cstddef>
#include <deque>
#include <limits>
#include <string_view>
#include <vector>

#include "wtc/error.hpp"
#include "wtc/graph.hpp"

namespace wtc {

enum class IntervalKind { weakly_toll, semi_weakly_toll, toll, monophonic, geodesic };

constexpr std::string_view to_string(IntervalKind k) noexcept {
  switch (k) {
    case IntervalKind::weakly_toll: return "wt";
    case IntervalKind::semi_weakly_toll: return "swt";
    case IntervalKind::toll: return "toll";
    case IntervalKind::monophonic: return "mono";
    case IntervalKind::geodesic: return "geo";
  }
  return "unknown";
}

constexpr bool is_ordered(IntervalKind k) noexcept { return k == IntervalKind::semi_weakly_toll; }

namespace detail {

inline void check_pair(const Graph& g, VertexId u, VertexId v) {
  g.check(u);
  g.check(v);
  require_connected(g);
}

// Components of the graph induced by `allowed`, with a per-vertex
// component index (npos outside `allowed`).
struct ComponentIndex {
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
  std::vector<VertexSet> components;
  std::vector<std::size_t> of;

  ComponentIndex(const Graph& g, const VertexSet& allowed)
      : components(components_within(g, allowed)), of(g.order(), npos) {
    for (std::size_t c = 0; c < components.size(); ++c)
      for (auto x : components[c]) of[x] = c;
  }

  // Indices of components with a vertex adjacent to `x`.
  VertexSet touching(const Graph& g, VertexId x) const {
    VertexSet s(components.size());
    for (auto y : g.adjacency_list(x))
      if (of[y] != npos) s.insert(of[y]);
    return s;
  }

  VertexSet members(const VertexSet& indices, std::size_t universe) const {
    VertexSet s(universe);
    for (auto c : indices) s |= components[c];
    return s;
  }
};

}  // namespace detail

// WT(u, v): vertices on some weakly toll walk between u and v.
//
// For non-adjacent u, v a weakly toll walk is u, a, ..., b, v where every
// interior vertex adjacent to u is the hub a, every one adjacent to v is
// the hub b, and hubs may repeat. A hub adjacent to both ends therefore
// forces a = b. Returning to u or v only passes through a hub, so the walk
// body is a walk from a to b in G - ((N[u] | N[v]) \ {a, b}), and any
// vertex of that component can be visited. With R = V \ (N[u] | N[v]):
//   common neighbour c:            c plus the R-components touching c,
//   a in N(u)\N(v), b in N(v)\N(u): if a ~ b or a, b touch a common
//                                   R-component, then a, b and every
//                                   R-component touching either.
inline VertexSet weakly_toll_interval(const Graph& g, VertexId u, VertexId v) {
  detail::check_pair(g, u, v);
  const auto n = g.order();
  if (u == v) return VertexSet(n, {u});
  if (g.adjacent(u, v)) return VertexSet(n, {u, v});

  const auto nu = g.neighbors(u), nv = g.neighbors(v);
  const auto rest = (g.closed_neighborhood(u) | g.closed_neighborhood(v)).complement();
  const detail::ComponentIndex comps(g, rest);

  VertexSet result(n, {u, v});
  const auto common = nu & nv;
  for (auto c : common) {
    result.insert(c);
    result |= comps.members(comps.touching(g, c), n);
  }

  const auto side_u = nu - nv, side_v = nv - nu;
  std::vector<VertexSet> touch_v;
  std::vector<VertexId> hubs_v = side_v.to_vector();
  for (auto b : hubs_v) touch_v.push_back(comps.touching(g, b));
  for (auto a : side_u) {
    const auto touch_a = comps.touching(g, a);
    for (std::size_t k = 0; k < hubs_v.size(); ++k) {
      const auto b = hubs_v[k];
      if (g.adjacent(a, b) || touch_a.intersects(touch_v[k])) {
        result.insert(a);
        result.insert(b);
        result |= comps.members(touch_a | touch_v[k], n);
      }
    }
  }
  return result;
}

// SWT(source, target): the weakly toll restriction applies only at the
// source. The walk is source, a, ... with every later vertex adjacent to
// the source equal to a; the target is unrestricted. Applied verbatim to an
// adjacent target this forces a = target.
inline VertexSet semi_weakly_toll_interval(const Graph& g, VertexId source, VertexId target) {
  detail::check_pair(g, source, target);
  const auto n = g.order();
  if (source == target) return VertexSet(n, {source});

  const auto rest = g.closed_neighborhood(source).complement();
  const detail::ComponentIndex comps(g, rest);
  VertexSet result(n, {source});
  for (auto a : g.neighbors(source)) {
    auto reach = comps.members(comps.touching(g, a), n);
    reach.insert(a);
    if (reach.contains(target)) result |= reach;
  }
  return result;
}

// T(u, v): vertices on some tolled walk. A tolled walk is u, a, P, b, v
// where a and b each occur once, so the body P is a walk inside
// R = V \ (N[u] | N[v]); a = b only for a common neighbour.
inline VertexSet toll_interval(const Graph& g, VertexId u, VertexId v) {
  detail::check_pair(g, u, v);
  const auto n = g.order();
  if (u == v) return VertexSet(n, {u});
  if (g.adjacent(u, v)) return VertexSet(n, {u, v});

  const auto nu = g.neighbors(u), nv = g.neighbors(v);
  const auto rest = (g.closed_neighborhood(u) | g.closed_neighborhood(v)).complement();
  const detail::ComponentIndex comps(g, rest);

  VertexSet result(n, {u, v});
  result |= nu & nv;
  const auto side_u = nu - nv, side_v = nv - nu;
  for (auto a : side_u)
    for (auto b : side_v)
      if (g.adjacent(a, b)) {
        result.insert(a);
        result.insert(b);
      }
  for (std::size_t c = 0; c < comps.components.size(); ++c) {
    VertexSet entry_u(n), entry_v(n);
    for (auto a : side_u)
      if (comps.touching(g, a).contains(c)) entry_u.insert(a);
    for (auto b : side_v)
      if (comps.touching(g, b).contains(c)) entry_v.insert(b);
    if (!entry_u.empty() && !entry_v.empty()) result |= comps.components[c] | entry_u | entry_v;
  }
  return result;
}

inline std::vector<std::size_t> bfs_distances(const Graph& g, VertexId s) {
  constexpr auto inf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.order(), inf);
  std::deque<VertexId> queue{s};
  dist[s] = 0;
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (auto y : g.adjacency_list(x))
      if (dist[y] == inf) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
  }
  return dist;
}

inline VertexSet geodesic_interval(const Graph& g, VertexId u, VertexId v) {
  detail::check_pair(g, u, v);
  const auto du = bfs_distances(g, u), dv = bfs_distances(g, v);
  VertexSet result(g.order());
  for (VertexId x = 0; x < g.order(); ++x)
    if (du[x] + dv[x] == du[v]) result.insert(x);
  return result;
}

// Union of all induced u-v paths, by depth-first enumeration. Exponential;
// intended for small graphs.
inline VertexSet monophonic_interval(const Graph& g, VertexId u, VertexId v) {
  detail::check_pair(g, u, v);
  const auto n = g.order();
  if (u == v) return VertexSet(n, {u});
  VertexSet result(n);
  std::vector<VertexId> path{u};
  VertexSet on_path(n, {u});
  // Vertices adjacent to some path vertex other than the last one.
  std::vector<VertexSet> blocked_stack{VertexSet(n)};

  auto extend = [&](auto&& self) -> void {
    const auto last = path.back();
    auto blocked = blocked_stack.back();
    for (auto x : g.adjacency_list(last)) {
      if (on_path.contains(x) || blocked.contains(x)) continue;
      if (x == v) {
        for (auto p : path) result.insert(p);
        result.insert(v);
        continue;
      }
      // Any path through x must end at v without chords; if v is already
      // blocked no induced continuation can reach it.
      path.push_back(x);
      on_path.insert(x);
      blocked_stack.push_back(blocked | g.neighbors(last));
      if (!blocked_stack.back().contains(v)) self(self);
      blocked_stack.pop_back();
      on_path.erase(x);
      path.pop_back();
    }
  };
  extend(extend);
  return result;
}

inline VertexSet interval(const Graph& g, VertexId u, VertexId v, IntervalKind kind) {
  switch (kind) {
    case IntervalKind::weakly_toll: return weakly_toll_interval(g, u, v);
    case IntervalKind::semi_weakly_toll: return semi_weakly_toll_interval(g, u, v);
    case IntervalKind::toll: return toll_interval(g, u, v);
    case IntervalKind::monophonic: return monophonic_interval(g, u, v);
    case IntervalKind::geodesic: return geodesic_interval(g, u, v);
  }
  throw error(errc::invalid_argument, "unknown interval kind");
}

// All pairwise intervals, table[u][v]. Ordered for semi weakly toll,
// mirrored otherwise.
inline std::vector<std::vector<VertexSet>> interval_table(const Graph& g, IntervalKind kind) {
  require_connected(g);
  const auto n = g.order();
  std::vector<std::vector<VertexSet>> table(n, std::vector<VertexSet>(n));
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = is_ordered(kind) ? 0 : u; v < n; ++v) {
      table[u][v] = interval(g, u, v, kind);
      if (!is_ordered(kind)) table[v][u] = table[u][v];
    }
  return table;
}

// Union of intervals over all pairs of S (ordered pairs for semi weakly toll).
inline VertexSet interval_closure(const Graph& g, const VertexSet& s, IntervalKind kind) {
  require_connected(g);
  if (s.universe() != g.order()) throw error(errc::invalid_argument, "vertex set does not belong to this graph");
  VertexSet result = s;
  const auto members = s.to_vector();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = is_ordered(kind) ? 0 : i + 1; j < members.size(); ++j)
      if (i != j) result |= interval(g, members[i], members[j], kind);
  return result;
}

inline bool is_weakly_toll_set(const Graph& g, const VertexSet& s) {
  return interval_closure(g, s, IntervalKind::weakly_toll).is_full();
}

}  // namespace wtc
