#pragma once

#include <cctype>
#include <cstddef>
#include <fstream>
#include <functional>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "wtc/error.hpp"
#include "wtc/graph.hpp"

namespace wtc {

namespace detail {

inline constexpr std::string_view graph6_header = ">>graph6<<";
inline constexpr std::size_t graph6_max_order = 258047;

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace detail

// graph6 encoding: N(n) followed by the upper triangle of the adjacency
// matrix in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed
// six bits per byte, big-endian, zero-padded, each byte offset by 63.
inline std::string encode_graph6(const Graph& g) {
  const auto n = g.order();
  if (n > detail::graph6_max_order) throw error(errc::invalid_argument, "graph too large for graph6");
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 0x3F) + 63);
  }
  unsigned chunk = 0;
  int bits = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++bits == 6) {
        out += static_cast<char>(chunk + 63);
        chunk = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out += static_cast<char>((chunk << (6 - bits)) + 63);
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  text = detail::trim(text);
  if (text.starts_with(detail::graph6_header)) text.remove_prefix(detail::graph6_header.size());
  auto bad = [&](const std::string& why) { return error(errc::malformed_graph6, why); };
  if (text.empty()) throw bad("empty record");
  for (char c : text)
    if (c < 63 || c > 126) throw bad("byte out of range 63..126");

  std::size_t pos = 0;
  std::size_t n = 0;
  if (static_cast<unsigned char>(text[0]) < 126) {
    n = static_cast<std::size_t>(text[0] - 63);
    pos = 1;
  } else {
    if (text.size() < 4) throw bad("truncated order header");
    if (static_cast<unsigned char>(text[1]) == 126) throw bad("orders above 258047 are not supported");
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | static_cast<std::size_t>(text[k] - 63);
    if (n <= 62) throw bad("long order header used for a small graph");
    pos = 4;
  }
  if (n == 0) throw error(errc::empty_graph, "graph6 record with zero vertices");

  const std::size_t pair_bits = n * (n - 1) / 2;
  const std::size_t expected = (pair_bits + 5) / 6;
  if (text.size() - pos != expected)
    throw bad("expected " + std::to_string(expected) + " data bytes, found " + std::to_string(text.size() - pos));

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i, ++bit) {
      const unsigned byte = static_cast<unsigned>(text[pos + bit / 6] - 63);
      if ((byte >> (5 - bit % 6)) & 1U) edges.emplace_back(i, j);
    }
  }
  if (bit % 6 != 0) {
    const unsigned last = static_cast<unsigned>(text.back() - 63);
    if ((last & ((1U << (6 - bit % 6)) - 1)) != 0) throw bad("nonzero padding bits");
  }
  return Graph::from_edge_list(n, edges);
}

// Edge-list text: first line "n m", then m lines "u v" (0-based).
inline Graph parse_edge_list(std::istream& in) {
  auto bad = [](const std::string& why) { return error(errc::malformed_edge_list, why); };
  long long n = 0, m = 0;
  if (!(in >> n >> m) || n < 1 || m < 0) throw bad("header must be \"n m\" with n >= 1");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long k = 0; k < m; ++k) {
    long long a = 0, b = 0;
    if (!(in >> a >> b)) throw bad("expected " + std::to_string(m) + " edges");
    if (a < 0 || b < 0) throw error(errc::vertex_out_of_range, "negative vertex id");
    edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
  }
  std::string rest;
  if (in >> rest) throw bad("trailing data after edge list");
  return Graph::from_edge_list(static_cast<std::size_t>(n), edges);
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

inline std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [a, b] : g.edges()) out << a << ' ' << b << '\n';
  return out.str();
}

// Text that is either an edge list or a single graph6 record.
inline Graph parse_graph_text(std::string_view text) {
  const auto t = detail::trim(text);
  if (!t.empty() && std::isdigit(static_cast<unsigned char>(t.front()))) {
    const auto line_end = t.find('\n');
    std::istringstream head{std::string(t.substr(0, line_end))};
    long long n = 0, m = 0;
    if (head >> n >> m) return parse_edge_list(t);
  }
  return parse_graph6(t);
}

inline Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::invalid_argument, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph_text(buf.str());
}

// One graph6 record per line; blank lines and lines starting with '#' are skipped.
inline std::vector<Graph> parse_graph6_list(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.push_back(parse_graph6(t));
  }
  return out;
}

inline std::string write_graph6_list(const std::vector<Graph>& graphs) {
  std::string out;
  for (const auto& g : graphs) out += encode_graph6(g) + '\n';
  return out;
}

// Graphviz DOT. `label` defaults to the graph's vertex names.
inline std::string write_dot(const Graph& g, const std::function<std::string(VertexId)>& label = {}) {
  std::ostringstream out;
  out << "graph G {\n";
  for (VertexId v = 0; v < g.order(); ++v) {
    std::string text = label ? label(v) : g.name(v);
    std::string escaped;
    for (char c : text) {
      if (c == '"' || c == '\\') escaped += '\\';
      escaped += c;
    }
    out << "  " << v << " [label=\"" << escaped << "\"];\n";
  }
  for (auto [a, b] : g.edges()) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace wtc
