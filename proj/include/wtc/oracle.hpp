#pragma once

// Definition-literal reference implementations. Nothing here may use
// wtc/intervals.hpp or wtc/convexity.hpp: these functions are what the
// engines are checked against.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "wtc/error.hpp"
#include "wtc/graph.hpp"

namespace wtc::oracle {

enum class WalkKind { weakly_toll, semi_weakly_toll, toll };

struct WalkBudget {
  std::size_t max_len;

  explicit WalkBudget(std::size_t len) : max_len(len) {
    if (len < 1) throw error(errc::invalid_argument, "walk budget must allow at least one edge");
  }
  // Default budget of 2n + 2 edges.
  static WalkBudget for_order(std::size_t n) { return WalkBudget(2 * n + 2); }
};

namespace detail {

// Search state after placing w_0..w_t of a walk starting at u:
//   at        w_t
//   first     w_1 (none while t = 0)
//   first_seen number of occurrences of w_1 so far, capped at 2
//   vhub      the single distinct vertex among w_0..w_t adjacent to v
//             (none if there is none; states with two distinct ones are
//             dropped since they can never satisfy the target condition)
//   vhub_seen occurrences of vhub, capped at 2
// Every future constraint depends only on these fields, so two partial
// walks with equal states accept exactly the same continuations.
struct State {
  std::uint32_t at, first, first_seen, vhub, vhub_seen;
  friend bool operator==(const State&, const State&) = default;
};

class WalkSearch {
 public:
  WalkSearch(const Graph& g, VertexId u, VertexId v, WalkKind kind) : n_(g.order()), u_(u), v_(v), kind_(kind) {
    adj_.assign(n_ * n_, 0);
    for (VertexId a = 0; a < n_; ++a)
      for (VertexId b = 0; b < n_; ++b) adj_[a * n_ + b] = g.adjacent(a, b) ? 1 : 0;
    none_ = static_cast<std::uint32_t>(n_);
  }

  VertexSet run(std::size_t max_len) {
    const std::size_t states = n_ * (n_ + 1) * 3 * (n_ + 1) * 3;
    // layers[t] = states reachable by walks with exactly t edges.
    std::vector<std::vector<State>> layers;
    std::vector<char> mark(states, 0);
    State start{static_cast<std::uint32_t>(u_), none_, 0, none_, 0};
    if (!absorb_vertex(start, u_, /*position=*/0)) return VertexSet(n_);
    layers.push_back({start});
    for (std::size_t t = 1; t <= max_len; ++t) {
      std::fill(mark.begin(), mark.end(), 0);
      std::vector<State> next;
      for (const auto& s : layers.back()) {
        for (VertexId x = 0; x < n_; ++x) {
          if (!adj(s.at, x)) continue;
          State ns = s;
          ns.at = static_cast<std::uint32_t>(x);
          if (!absorb_vertex(ns, x, t)) continue;
          const auto key = index(ns);
          if (!mark[key]) {
            mark[key] = 1;
            next.push_back(ns);
          }
        }
      }
      layers.push_back(std::move(next));
    }

    // steps_left[key] = fewest extra edges to an accepting end, computed by
    // iterating backwards over the same transition system.
    constexpr std::size_t inf = static_cast<std::size_t>(-1);
    std::vector<std::size_t> best(states, inf);
    std::vector<State> all;
    std::vector<char> known(states, 0);
    for (const auto& layer : layers)
      for (const auto& s : layer)
        if (!known[index(s)]) {
          known[index(s)] = 1;
          all.push_back(s);
        }
    for (const auto& s : all)
      if (accepting(s)) best[index(s)] = 0;
    for (std::size_t round = 0; round < max_len; ++round) {
      bool changed = false;
      for (const auto& s : all) {
        for (VertexId x = 0; x < n_; ++x) {
          if (!adj(s.at, x)) continue;
          State ns = s;
          ns.at = static_cast<std::uint32_t>(x);
          if (!absorb_vertex(ns, x, 1)) continue;
          const auto nk = index(ns);
          if (!known[nk] || best[nk] == inf) continue;
          if (best[nk] + 1 < best[index(s)]) {
            best[index(s)] = best[nk] + 1;
            changed = true;
          }
        }
      }
      if (!changed) break;
    }

    VertexSet result(n_);
    for (std::size_t t = 0; t < layers.size(); ++t)
      for (const auto& s : layers[t]) {
        const auto b = best[index(s)];
        if (b != inf && t + b <= max_len) result.insert(s.at);
      }
    return result;
  }

 private:
  bool adj(std::size_t a, std::size_t b) const { return adj_[a * n_ + b] != 0; }

  std::size_t index(const State& s) const {
    return (((static_cast<std::size_t>(s.at) * (n_ + 1) + s.first) * 3 + s.first_seen) * (n_ + 1) + s.vhub) * 3 +
           s.vhub_seen;
  }

  // Records vertex x placed at walk position `position` (only 0, 1 or
  // "later" matters). Returns false if the prefix already violates a
  // condition that no continuation can repair.
  bool absorb_vertex(State& s, VertexId x, std::size_t position) const {
    const auto xi = static_cast<std::uint32_t>(x);
    if (position == 1 && s.first == none_) {
      s.first = xi;
      s.first_seen = 1;
    } else if (position >= 1) {
      // u w_i in E implies w_i = w_1, for i >= 1.
      if (adj(u_, x) && xi != s.first) return false;
      if (xi == s.first) s.first_seen = std::min<std::uint32_t>(s.first_seen + 1, 2);
    }
    if (kind_ == WalkKind::semi_weakly_toll) return true;
    // w_i v in E implies w_i = w_{k-1}: collect the v-neighbours seen.
    if (adj(x, v_)) {
      if (s.vhub == none_) {
        s.vhub = xi;
        s.vhub_seen = 1;
      } else if (s.vhub != xi) {
        return false;
      } else {
        s.vhub_seen = std::min<std::uint32_t>(s.vhub_seen + 1, 2);
      }
    }
    return true;
  }

  // The walk may stop here (w_k = v, k >= 1).
  bool accepting(const State& s) const {
    if (s.at != v_ || s.first == none_) return false;
    // Condition at i = k: v adjacent to u forces v = w_1.
    if (adj(u_, v_) && s.first != v_) return false;
    if (kind_ == WalkKind::semi_weakly_toll) return true;
    // The predecessor w_{k-1} is adjacent to v, so a single recorded hub
    // is exactly w_{k-1}.
    if (s.vhub == none_) return false;
    if (kind_ == WalkKind::toll) {
      if (s.first_seen != 1 || s.vhub_seen != 1) return false;
    }
    return true;
  }

  std::size_t n_;
  VertexId u_, v_;
  WalkKind kind_;
  std::vector<char> adj_;
  std::uint32_t none_;
};

}  // namespace detail

// Vertices on some walk of at most budget.max_len edges from u to v that
// satisfies the defining conditions of `kind`. For u = v this is the
// zero-length walk only.
inline VertexSet oracle_interval(const Graph& g, VertexId u, VertexId v, WalkKind kind, WalkBudget budget) {
  g.check(u);
  g.check(v);
  require_connected(g);
  if (u == v) return VertexSet(g.order(), {u});
  return detail::WalkSearch(g, u, v, kind).run(budget.max_len);
}

inline VertexSet oracle_interval(const Graph& g, VertexId u, VertexId v, WalkKind kind) {
  return oracle_interval(g, u, v, kind, WalkBudget::for_order(g.order()));
}

struct SearchResult {
  std::size_t number;
  VertexSet witness;
};

namespace detail {

inline std::vector<std::vector<VertexSet>> oracle_wt_table(const Graph& g) {
  const auto n = g.order();
  std::vector<std::vector<VertexSet>> table(n, std::vector<VertexSet>(n));
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = 0; b < n; ++b) table[a][b] = oracle_interval(g, a, b, WalkKind::weakly_toll);
  return table;
}

inline VertexSet closure(const std::vector<std::vector<VertexSet>>& table, const VertexSet& s) {
  VertexSet out = s;
  for (auto a : s)
    for (auto b : s) out |= table[a][b];
  return out;
}

// Smallest k and lexicographically least k-subset whose image under
// `covers` is the whole vertex set.
template <typename Covers>
SearchResult least_subset(std::size_t n, Covers covers) {
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<VertexId> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      auto s = VertexSet::from_range(n, pick);
      if (covers(s)) return {k, s};
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return {n, VertexSet::full(n)};
}

}  // namespace detail

// Weakly toll number by subset enumeration over oracle intervals.
inline SearchResult oracle_wtn(const Graph& g) {
  require_connected(g);
  const auto table = detail::oracle_wt_table(g);
  return detail::least_subset(g.order(), [&](const VertexSet& s) { return detail::closure(table, s).is_full(); });
}

// Hull as the intersection of all weakly toll convex supersets.
inline VertexSet oracle_hull(const Graph& g, const VertexSet& s) {
  require_connected(g);
  const auto n = g.order();
  if (n > 20) throw error(errc::invalid_argument, "oracle hull enumerates all subsets; graph too large");
  const auto table = detail::oracle_wt_table(g);
  VertexSet hull = VertexSet::full(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet c(n);
    for (VertexId x = 0; x < n; ++x)
      if ((mask >> x) & 1U) c.insert(x);
    if (!s.is_subset_of(c)) continue;
    if (detail::closure(table, c) == c) hull &= c;
  }
  return hull;
}

// Weakly toll hull number, hulls taken as iterated closure to a fixpoint.
inline SearchResult oracle_wth(const Graph& g) {
  require_connected(g);
  const auto table = detail::oracle_wt_table(g);
  return detail::least_subset(g.order(), [&](const VertexSet& s) {
    auto cur = s;
    while (true) {
      auto next = detail::closure(table, cur);
      if (next == cur) break;
      cur = std::move(next);
    }
    return cur.is_full();
  });
}

}  // namespace wtc::oracle
