#pragma once

// Closed-form predictions for weakly toll intervals and invariants of
// lexicographic, corona, Cartesian and strong products, expressed through
// intervals of the factors. Vertex ids follow the layout of
// wtc/products.hpp: (g, h) -> g*|V(H)| + h for pair products; g_i -> i and
// h^i -> |V(G)| + i*|V(H)| + h for the corona.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wtc/convexity.hpp"
#include "wtc/graph.hpp"
#include "wtc/intervals.hpp"

namespace wtc {

enum class PredictionTarget { interval, wtn, wth, wtn_upper_bound };

struct Prediction {
  PredictionTarget target = PredictionTarget::interval;
  std::optional<VertexSet> set;  // interval predictions
  std::size_t number = 0;        // wtn / wth value or upper bound
  std::string statement;         // the claim being evaluated
  bool applicable = true;
  std::string reason;            // why not applicable

  bool holds_for(const VertexSet& observed) const { return applicable && set && *set == observed; }
  bool holds_for(std::size_t observed) const {
    if (!applicable) return false;
    return target == PredictionTarget::wtn_upper_bound ? observed <= number : observed == number;
  }
};

namespace detail {

inline bool admissible(const Graph& g) { return is_connected(g) && !is_complete(g); }

inline Prediction skip(PredictionTarget target, std::string statement, std::string reason) {
  Prediction p;
  p.target = target;
  p.statement = std::move(statement);
  p.applicable = false;
  p.reason = std::move(reason);
  return p;
}

inline Prediction interval_prediction(std::string statement, VertexSet set) {
  Prediction p;
  p.statement = std::move(statement);
  p.set = std::move(set);
  return p;
}

inline Prediction number_prediction(PredictionTarget target, std::string statement, std::size_t value) {
  Prediction p;
  p.target = target;
  p.statement = std::move(statement);
  p.number = value;
  return p;
}

inline std::optional<std::string> factors_admissible(const Graph& g, const Graph& h) {
  if (!admissible(g)) return "G must be connected and not complete";
  if (!admissible(h)) return "H must be connected and not complete";
  return std::nullopt;
}

// Vertices of H outside WT_H(h1,h2) adjacent to exactly one of h1, h2.
inline VertexSet one_sided_misses(const Graph& h, VertexId h1, VertexId h2) {
  const auto w = weakly_toll_interval(h, h1, h2);
  VertexSet out(h.order());
  for (VertexId x = 0; x < h.order(); ++x)
    if (!w.contains(x) && (h.adjacent(x, h1) != h.adjacent(x, h2))) out.insert(x);
  return out;
}

struct CoronaLayout {
  std::size_t n, m;
  std::size_t order() const { return n * (1 + m); }
  VertexId base(VertexId i) const { return i; }
  VertexId copy(VertexId i, VertexId h) const { return n + i * m + h; }
  void add_copy(VertexSet& s, VertexId i) const {
    for (VertexId h = 0; h < m; ++h) s.insert(copy(i, h));
  }
};

}  // namespace detail

// WT of (g,h1), (g,h2) in G[H], h1 h2 non-adjacent: everything except
// (g,x) with x outside WT_H(h1,h2) and adjacent to exactly one of h1, h2.
inline Prediction lex_interval_same_layer(const Graph& g, const Graph& h, VertexId gv, VertexId h1, VertexId h2) {
  const std::string claim = "WT_G[H]((g,h1),(g,h2)) = V minus one-sided misses of WT_H(h1,h2) in layer g";
  if (auto why = detail::factors_admissible(g, h)) return detail::skip(PredictionTarget::interval, claim, *why);
  g.check(gv);
  h.check(h1);
  h.check(h2);
  if (h1 == h2 || h.adjacent(h1, h2))
    return detail::skip(PredictionTarget::interval, claim, "h1, h2 must be distinct and non-adjacent");
  const auto m = h.order();
  auto result = VertexSet::full(g.order() * m);
  for (auto x : detail::one_sided_misses(h, h1, h2)) result.erase(gv * m + x);
  return detail::interval_prediction(claim, std::move(result));
}

// WT of (g1,h1), (g2,h2) with g1 g2 and h1 h2 non-adjacent:
// WT_G(g1,g2) x V(H) minus the H-layer neighbourhoods of both ends.
inline Prediction lex_interval_cross_layer(const Graph& g, const Graph& h, VertexId g1, VertexId h1, VertexId g2,
                                           VertexId h2) {
  const std::string claim = "WT_G[H]((g1,h1),(g2,h2)) = WT_G(g1,g2) x V(H) minus layer neighbourhoods of the ends";
  if (auto why = detail::factors_admissible(g, h)) return detail::skip(PredictionTarget::interval, claim, *why);
  g.check(g1);
  g.check(g2);
  h.check(h1);
  h.check(h2);
  if (g1 == g2 || g.adjacent(g1, g2))
    return detail::skip(PredictionTarget::interval, claim, "g1, g2 must be distinct and non-adjacent");
  if (h.adjacent(h1, h2)) return detail::skip(PredictionTarget::interval, claim, "h1, h2 must be non-adjacent");
  const auto m = h.order();
  VertexSet result(g.order() * m);
  for (auto x : weakly_toll_interval(g, g1, g2))
    for (VertexId y = 0; y < m; ++y) result.insert(x * m + y);
  for (auto y : h.neighbors(h1)) result.erase(g1 * m + y);
  for (auto y : h.neighbors(h2)) result.erase(g2 * m + y);
  return detail::interval_prediction(claim, std::move(result));
}

inline Prediction lex_wtn(const Graph& g, const Graph& h) {
  const std::string claim = "wtn(G[H]) = 2 if wtn(H) = 2, otherwise 3";
  if (auto why = detail::factors_admissible(g, h)) return detail::skip(PredictionTarget::wtn, claim, *why);
  return detail::number_prediction(PredictionTarget::wtn, claim, wtn(h).number == 2 ? 2 : 3);
}

inline Prediction lex_wth(const Graph& g, const Graph& h) {
  const std::string claim = "wth(G[H]) = 2";
  if (auto why = detail::factors_admissible(g, h)) return detail::skip(PredictionTarget::wth, claim, *why);
  return detail::number_prediction(PredictionTarget::wth, claim, 2);
}

// WT of h1^i, h2^i (same copy, non-adjacent): everything except the
// one-sided misses of WT_H(h1,h2) inside copy i.
inline Prediction corona_interval_same_copy(const Graph& g, const Graph& h, VertexId i, VertexId h1, VertexId h2) {
  const std::string claim = "WT(h1^i,h2^i) = V minus one-sided misses of WT_H(h1,h2) in copy i";
  if (auto why = detail::factors_admissible(g, h)) return detail::skip(PredictionTarget::interval, claim, *why);
  g.check(i);
  h.check(h1);
  h.check(h2);
  if (h1 == h2 || h.adjacent(h1, h2))
    return detail::skip(PredictionTarget::interval, claim, "h1, h2 must be distinct and non-adjacent");
  const detail::CoronaLayout lay{g.order(), h.order()};
  auto result = VertexSet::full(lay.order());
  for (auto x : detail::one_sided_misses(h, h1, h2)) result.erase(lay.copy(i, x));
  return detail::interval_prediction(claim, std::move(result));
}

// WT of h_k^i, h_l^j with i != j: everything except N_{H^i}(h_k^i) and
// N_{H^j}(h_l^j).
inline Prediction corona_interval_cross_copies(const Graph& g, const Graph& h, VertexId i, VertexId k, VertexId j,
                                               VertexId l) {
  const std::string claim = "WT(h_k^i,h_l^j) = V minus N_{H^i}(h_k^i) and N_{H^j}(h_l^j)";
  if (auto why = detail::factors_admissible(g, h)) return detail::skip(PredictionTarget::interval, claim, *why);
  g.check(i);
  g.check(j);
  h.check(k);
  h.check(l);
  if (i == j) return detail::skip(PredictionTarget::interval, claim, "copies must differ");
  const detail::CoronaLayout lay{g.order(), h.order()};
  auto result = VertexSet::full(lay.order());
  for (auto y : h.neighbors(k)) result.erase(lay.copy(i, y));
  for (auto y : h.neighbors(l)) result.erase(lay.copy(j, y));
  return detail::interval_prediction(claim, std::move(result));
}

// WT of g_i, g_j: WT_G(g_i,g_j) plus every copy H^k whose g_k lies strictly
// inside it.
inline Prediction corona_interval_base_pair(const Graph& g, const Graph& h, VertexId i, VertexId j) {
  const std::string claim = "WT(g_i,g_j) = WT_G(g_i,g_j) plus copies H^k for inner g_k";
  if (auto why = detail::factors_admissible(g, h)) return detail::skip(PredictionTarget::interval, claim, *why);
  g.check(i);
  g.check(j);
  if (i == j) return detail::skip(PredictionTarget::interval, claim, "base vertices must differ");
  const detail::CoronaLayout lay{g.order(), h.order()};
  VertexSet result(lay.order());
  for (auto x : weakly_toll_interval(g, i, j)) {
    result.insert(lay.base(x));
    if (x != i && x != j) lay.add_copy(result, x);
  }
  return detail::interval_prediction(claim, std::move(result));
}

// WT of g_i, h_k^j. For i = j the pair is adjacent. Otherwise, with
// S = SWT_G(g_i, g_j):
//   {g_i, g_j} + (V(H^j) \ N_{H^j}(h_k^j)) + {x} + V(H^x) for x in S \ {g_i, g_j}.
inline Prediction corona_interval_mixed(const Graph& g, const Graph& h, VertexId i, VertexId j, VertexId k) {
  const std::string claim = "WT(g_i,h_k^j) from SWT_G(g_i,g_j)";
  if (auto why = detail::factors_admissible(g, h)) return detail::skip(PredictionTarget::interval, claim, *why);
  g.check(i);
  g.check(j);
  h.check(k);
  const detail::CoronaLayout lay{g.order(), h.order()};
  VertexSet result(lay.order());
  result.insert(lay.base(i));
  if (i == j) {
    result.insert(lay.copy(i, k));
    return detail::interval_prediction(claim, std::move(result));
  }
  result.insert(lay.base(j));
  lay.add_copy(result, j);
  for (auto y : h.neighbors(k)) result.erase(lay.copy(j, y));
  for (auto x : semi_weakly_toll_interval(g, i, j)) {
    if (x == i || x == j) continue;
    result.insert(lay.base(x));
    lay.add_copy(result, x);
  }
  return detail::interval_prediction(claim, std::move(result));
}

// For non-adjacent g_i, g_j: WT(g_i,g_j) restricted to base vertices is
// WT_G(g_i,g_j). The prediction is the restricted set.
inline Prediction corona_base_restriction(const Graph& g, const Graph& h, VertexId i, VertexId j) {
  const std::string claim = "WT(g_i,g_j) restricted to V(G) equals WT_G(g_i,g_j)";
  if (auto why = detail::factors_admissible(g, h)) return detail::skip(PredictionTarget::interval, claim, *why);
  g.check(i);
  g.check(j);
  if (i == j || g.adjacent(i, j))
    return detail::skip(PredictionTarget::interval, claim, "g_i, g_j must be distinct and non-adjacent");
  const detail::CoronaLayout lay{g.order(), h.order()};
  VertexSet result(lay.order());
  for (auto x : weakly_toll_interval(g, i, j)) result.insert(lay.base(x));
  return detail::interval_prediction(claim, std::move(result));
}

inline Prediction corona_wtn(const Graph& g, const Graph& h) {
  const std::string claim = "wtn(G o H) = 2 if wtn(H) = 2, otherwise 3";
  if (auto why = detail::factors_admissible(g, h)) return detail::skip(PredictionTarget::wtn, claim, *why);
  return detail::number_prediction(PredictionTarget::wtn, claim, wtn(h).number == 2 ? 2 : 3);
}

inline Prediction corona_wth(const Graph& g, const Graph& h) {
  const std::string claim = "wth(G o H) = 2";
  if (auto why = detail::factors_admissible(g, h)) return detail::skip(PredictionTarget::wth, claim, *why);
  return detail::number_prediction(PredictionTarget::wth, claim, 2);
}

// Exactly 2 if some attached graph is connected, non-complete and has
// wtn 2; at most 3 if some attached graph is connected and non-complete;
// no prediction otherwise.
inline Prediction generalized_corona_wtn(const Graph& g, const std::vector<Graph>& fibers) {
  const std::string claim = "wtn(G o^ H_i) = 2 if some wtn(H_i) = 2, at most 3 if some H_i is not complete";
  if (fibers.size() != g.order())
    throw error(errc::invalid_argument, "generalized corona needs one graph per base vertex");
  if (!is_connected(g) || g.order() < 2)
    return detail::skip(PredictionTarget::wtn, claim, "G must be connected and non-trivial");
  bool some_admissible = false;
  for (const auto& f : fibers) {
    if (!detail::admissible(f)) continue;
    some_admissible = true;
    if (wtn(f).number == 2) return detail::number_prediction(PredictionTarget::wtn, claim, 2);
  }
  if (!some_admissible)
    return detail::skip(PredictionTarget::wtn, claim, "no attached graph is connected and non-complete");
  return detail::number_prediction(PredictionTarget::wtn_upper_bound, claim, 3);
}

inline Prediction generalized_corona_wth(const Graph& g, const std::vector<Graph>& fibers) {
  const std::string claim = "wth(G o^ H_i) = 2";
  if (fibers.size() != g.order())
    throw error(errc::invalid_argument, "generalized corona needs one graph per base vertex");
  if (!is_connected(g) || g.order() < 2)
    return detail::skip(PredictionTarget::wth, claim, "G must be connected and non-trivial");
  for (const auto& f : fibers)
    if (detail::admissible(f)) return detail::number_prediction(PredictionTarget::wth, claim, 2);
  return detail::skip(PredictionTarget::wth, claim, "no attached graph is connected and non-complete");
}

inline Prediction cartesian_wtn(const Graph& g, const Graph& h) {
  const std::string claim = "wtn(G x H) = 2 for Cartesian products";
  if (!is_connected(g) || !is_connected(h) || g.order() < 2 || h.order() < 2)
    return detail::skip(PredictionTarget::wtn, claim, "both factors must be connected and non-trivial");
  return detail::number_prediction(PredictionTarget::wtn, claim, 2);
}

inline Prediction strong_wtn_bound(const Graph& g, const Graph& h) {
  const std::string claim = "wtn(G strong H) <= 3";
  if (auto why = detail::factors_admissible(g, h)) return detail::skip(PredictionTarget::wtn_upper_bound, claim, *why);
  return detail::number_prediction(PredictionTarget::wtn_upper_bound, claim, 3);
}

}  // namespace wtc
