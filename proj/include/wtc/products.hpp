#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wtc/error.hpp"
#include "wtc/graph.hpp"

namespace wtc {

enum class ProductKind { lexicographic, cartesian, strong, corona, generalized_corona };

constexpr std::string_view to_string(ProductKind k) noexcept {
  switch (k) {
    case ProductKind::lexicographic: return "lexicographic";
    case ProductKind::cartesian: return "cartesian";
    case ProductKind::strong: return "strong";
    case ProductKind::corona: return "corona";
    case ProductKind::generalized_corona: return "generalized_corona";
  }
  return "unknown";
}

struct PairLabel {
  VertexId g;
  VertexId h;
  friend bool operator==(const PairLabel&, const PairLabel&) = default;
};
// Vertex g_i of the base graph.
struct CoronaBase {
  VertexId i;
  friend bool operator==(const CoronaBase&, const CoronaBase&) = default;
};
// Vertex h of the copy attached to g_i.
struct CoronaCopy {
  VertexId i;
  VertexId h;
  friend bool operator==(const CoronaCopy&, const CoronaCopy&) = default;
};

using ProductVertexLabel = std::variant<PairLabel, CoronaBase, CoronaCopy>;

inline std::string label_string(const ProductVertexLabel& label) {
  struct {
    std::string operator()(const PairLabel& p) const {
      return "(" + std::to_string(p.g) + "," + std::to_string(p.h) + ")";
    }
    std::string operator()(const CoronaBase& b) const { return "g_" + std::to_string(b.i); }
    std::string operator()(const CoronaCopy& c) const {
      return "h_" + std::to_string(c.h) + "^" + std::to_string(c.i);
    }
  } visitor;
  return std::visit(visitor, label);
}

// A product graph with coordinates for every vertex. `factors` holds G
// followed by H (or H_1..H_n for the generalized corona).
//
// Vertex order: pair products are row-major over (g, h), i.e. (g, h) has id
// g*|V(H)| + h. Coronas list the base vertices first, then copy 0, copy 1, ...
class ProductGraph {
 public:
  ProductGraph(ProductKind kind, Graph graph, std::vector<ProductVertexLabel> labels, std::vector<Graph> factors,
               std::vector<VertexId> copy_offsets = {})
      : kind_(kind),
        graph_(std::move(graph)),
        labels_(std::move(labels)),
        factors_(std::move(factors)),
        copy_offsets_(std::move(copy_offsets)) {}

  ProductKind kind() const noexcept { return kind_; }
  const Graph& graph() const noexcept { return graph_; }
  const std::vector<Graph>& factors() const noexcept { return factors_; }
  const Graph& base() const noexcept { return factors_.front(); }
  // Second factor H, or the graph attached to g_i for a generalized corona.
  const Graph& fiber(VertexId i = 0) const {
    if (kind_ == ProductKind::generalized_corona) {
      base().check(i);
      return factors_[1 + i];
    }
    return factors_[1];
  }

  const ProductVertexLabel& label(VertexId v) const {
    graph_.check(v);
    return labels_[v];
  }
  std::string label_string(VertexId v) const { return wtc::label_string(label(v)); }

  bool is_pair_product() const noexcept {
    return kind_ == ProductKind::lexicographic || kind_ == ProductKind::cartesian || kind_ == ProductKind::strong;
  }
  bool is_corona() const noexcept { return !is_pair_product(); }

  VertexId pair_vertex(VertexId g, VertexId h) const {
    require_pair();
    base().check(g);
    fiber().check(h);
    return g * fiber().order() + h;
  }
  VertexId base_vertex(VertexId i) const {
    require_corona();
    base().check(i);
    return i;
  }
  VertexId copy_vertex(VertexId i, VertexId h) const {
    require_corona();
    fiber(i).check(h);
    return copy_offsets_[i] + h;
  }

  // p_G and p_H.
  VertexId project_g(VertexId v) const {
    require_pair();
    return std::get<PairLabel>(label(v)).g;
  }
  VertexId project_h(VertexId v) const {
    require_pair();
    return std::get<PairLabel>(label(v)).h;
  }

  // G^h = {(g, h) : g in V(G)}.
  VertexSet g_layer(VertexId h) const {
    require_pair();
    VertexSet s(graph_.order());
    for (VertexId g = 0; g < base().order(); ++g) s.insert(pair_vertex(g, h));
    return s;
  }
  // ^gH = {(g, h) : h in V(H)}.
  VertexSet h_layer(VertexId g) const {
    require_pair();
    VertexSet s(graph_.order());
    for (VertexId h = 0; h < fiber().order(); ++h) s.insert(pair_vertex(g, h));
    return s;
  }
  // V(H^i).
  VertexSet corona_copy(VertexId i) const {
    require_corona();
    VertexSet s(graph_.order());
    for (VertexId h = 0; h < fiber(i).order(); ++h) s.insert(copy_vertex(i, h));
    return s;
  }
  VertexSet base_vertices() const {
    require_corona();
    VertexSet s(graph_.order());
    for (VertexId i = 0; i < base().order(); ++i) s.insert(i);
    return s;
  }

 private:
  void require_pair() const {
    if (!is_pair_product())
      throw error(errc::wrong_product_kind, std::string(to_string(kind_)) + " has no (g,h) coordinates");
  }
  void require_corona() const {
    if (!is_corona())
      throw error(errc::wrong_product_kind, std::string(to_string(kind_)) + " has no corona coordinates");
  }

  ProductKind kind_;
  Graph graph_;
  std::vector<ProductVertexLabel> labels_;
  std::vector<Graph> factors_;
  std::vector<VertexId> copy_offsets_;
};

namespace detail {

template <typename AdjacentRule>
ProductGraph pair_product(ProductKind kind, const Graph& g, const Graph& h, AdjacentRule rule) {
  const auto ng = g.order(), nh = h.order();
  std::vector<ProductVertexLabel> labels;
  labels.reserve(ng * nh);
  for (VertexId a = 0; a < ng; ++a)
    for (VertexId b = 0; b < nh; ++b) labels.emplace_back(PairLabel{a, b});
  std::vector<Edge> edges;
  for (VertexId x = 0; x < ng * nh; ++x) {
    for (VertexId y = x + 1; y < ng * nh; ++y) {
      const VertexId g1 = x / nh, h1 = x % nh, g2 = y / nh, h2 = y % nh;
      if (rule(g1, h1, g2, h2)) edges.emplace_back(x, y);
    }
  }
  return ProductGraph(kind, Graph::from_edge_list(ng * nh, edges), std::move(labels), {g, h});
}

}  // namespace detail

// (g1,h1) ~ (g2,h2) iff g1g2 in E(G), or g1 = g2 and h1h2 in E(H).
inline ProductGraph lexicographic(const Graph& g, const Graph& h) {
  return detail::pair_product(ProductKind::lexicographic, g, h, [&](VertexId g1, VertexId h1, VertexId g2, VertexId h2) {
    return g.adjacent(g1, g2) || (g1 == g2 && h.adjacent(h1, h2));
  });
}

inline ProductGraph cartesian(const Graph& g, const Graph& h) {
  return detail::pair_product(ProductKind::cartesian, g, h, [&](VertexId g1, VertexId h1, VertexId g2, VertexId h2) {
    return (g.adjacent(g1, g2) && h1 == h2) || (g1 == g2 && h.adjacent(h1, h2));
  });
}

inline ProductGraph strong(const Graph& g, const Graph& h) {
  return detail::pair_product(ProductKind::strong, g, h, [&](VertexId g1, VertexId h1, VertexId g2, VertexId h2) {
    const bool eg = g.adjacent(g1, g2), eh = h.adjacent(h1, h2);
    return (eg && h1 == h2) || (g1 == g2 && eh) || (eg && eh);
  });
}

namespace detail {

inline ProductGraph corona_impl(ProductKind kind, const Graph& g, std::vector<Graph> fibers) {
  const auto n = g.order();
  std::vector<ProductVertexLabel> labels;
  std::vector<VertexId> offsets;
  std::vector<Edge> edges = g.edges();
  for (VertexId i = 0; i < n; ++i) labels.emplace_back(CoronaBase{i});
  VertexId next = n;
  for (VertexId i = 0; i < n; ++i) {
    const auto& hi = fibers[kind == ProductKind::corona ? 0 : i];
    offsets.push_back(next);
    for (VertexId x = 0; x < hi.order(); ++x) {
      labels.emplace_back(CoronaCopy{i, x});
      edges.emplace_back(i, next + x);
    }
    for (auto [a, b] : hi.edges()) edges.emplace_back(next + a, next + b);
    next += hi.order();
  }
  std::vector<Graph> factors{g};
  for (auto& f : fibers) factors.push_back(std::move(f));
  return ProductGraph(kind, Graph::from_edge_list(next, edges), std::move(labels), std::move(factors),
                      std::move(offsets));
}

}  // namespace detail

// One copy H^i of H per g_i, with g_i joined to all of H^i.
inline ProductGraph corona(const Graph& g, const Graph& h) { return detail::corona_impl(ProductKind::corona, g, {h}); }

inline ProductGraph generalized_corona(const Graph& g, std::vector<Graph> fibers) {
  if (fibers.size() != g.order())
    throw error(errc::invalid_argument, "generalized corona needs one graph per base vertex (" +
                                            std::to_string(g.order()) + "), got " + std::to_string(fibers.size()));
  return detail::corona_impl(ProductKind::generalized_corona, g, std::move(fibers));
}

}  // namespace wtc
