#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wtc/closed_forms.hpp"
#include "wtc/convexity.hpp"
#include "wtc/corpus.hpp"
#include "wtc/generators.hpp"
#include "wtc/graph_io.hpp"
#include "wtc/intervals.hpp"
#include "wtc/products.hpp"
#include "wtc/verify.hpp"

namespace {

constexpr int exit_usage = 2;

// Generator shorthands accepted wherever a graph is expected.
//   path:k cycle:k complete:k star:k bridge:k tree:k:seed random:k:p:seed
wtc::Graph generated_graph(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  auto num = [&](std::size_t i) -> std::size_t {
    if (i >= parts.size()) throw wtc::error(wtc::errc::invalid_argument, "generator '" + text + "' needs more fields");
    return std::stoull(parts[i]);
  };
  const auto& kind = parts.front();
  if (kind == "path") return wtc::path_graph(num(1));
  if (kind == "cycle") return wtc::cycle_graph(num(1));
  if (kind == "complete") return wtc::complete_graph(num(1));
  if (kind == "star") return wtc::star_graph(num(1));
  if (kind == "bridge") return wtc::two_clique_bridge(num(1));
  if (kind == "tree") return wtc::random_tree(num(1), num(2));
  if (kind == "random") {
    if (parts.size() < 4) throw wtc::error(wtc::errc::invalid_argument, "random:k:p:seed expected");
    return wtc::random_connected_graph(num(1), std::stod(parts[2]), num(3));
  }
  throw wtc::error(wtc::errc::invalid_argument, "unknown generator '" + kind + "'");
}

// A file path, a generator shorthand or an inline graph6 string.
wtc::Graph load_graph(const std::string& text) {
  if (std::filesystem::is_regular_file(text)) return wtc::read_graph_file(text);
  if (text.find(':') != std::string::npos) return generated_graph(text);
  return wtc::parse_graph6(text);
}

const std::map<std::string, wtc::IntervalKind> interval_kinds{
    {"wt", wtc::IntervalKind::weakly_toll}, {"swt", wtc::IntervalKind::semi_weakly_toll},
    {"toll", wtc::IntervalKind::toll},      {"mono", wtc::IntervalKind::monophonic},
    {"geo", wtc::IntervalKind::geodesic}};

const std::map<std::string, wtc::ProductKind> product_kinds{
    {"lex", wtc::ProductKind::lexicographic},
    {"cart", wtc::ProductKind::cartesian},
    {"strong", wtc::ProductKind::strong},
    {"corona", wtc::ProductKind::corona},
    {"gcorona", wtc::ProductKind::generalized_corona}};

// Either --graph, or --product with --g and --h built in this process so
// vertex labels are known.
struct GraphInput {
  std::string graph;
  std::string product;
  std::string g;
  std::vector<std::string> h;

  void add_to(CLI::App* cmd) {
    auto* graph_opt = cmd->add_option("--graph", graph, "graph6 string, graph file or generator (path:4, bridge:3, ...)");
    auto* product_opt =
        cmd->add_option("--product", product, "build a product in-session instead")->check(CLI::IsMember(product_kinds));
    cmd->add_option("--g", g, "first factor / base graph");
    cmd->add_option("--h", h, "second factor; repeat once per base vertex for gcorona");
    graph_opt->excludes(product_opt);
  }

  std::optional<wtc::ProductGraph> build_product() const {
    if (product.empty()) return std::nullopt;
    return make_product(product_kinds.at(product), g, h);
  }

  static wtc::ProductGraph make_product(wtc::ProductKind kind, const std::string& g_text,
                                        const std::vector<std::string>& h_texts) {
    if (g_text.empty() || h_texts.empty()) throw wtc::error(wtc::errc::invalid_argument, "products need --g and --h");
    const auto g = load_graph(g_text);
    std::vector<wtc::Graph> hs;
    for (const auto& t : h_texts) hs.push_back(load_graph(t));
    if (kind != wtc::ProductKind::generalized_corona && hs.size() != 1)
      throw wtc::error(wtc::errc::invalid_argument, "exactly one --h expected");
    switch (kind) {
      case wtc::ProductKind::lexicographic: return wtc::lexicographic(g, hs[0]);
      case wtc::ProductKind::cartesian: return wtc::cartesian(g, hs[0]);
      case wtc::ProductKind::strong: return wtc::strong(g, hs[0]);
      case wtc::ProductKind::corona: return wtc::corona(g, hs[0]);
      case wtc::ProductKind::generalized_corona: return wtc::generalized_corona(g, std::move(hs));
    }
    throw wtc::error(wtc::errc::invalid_argument, "unknown product kind");
  }

  // Graph plus the product it came from, if any.
  std::pair<wtc::Graph, std::optional<wtc::ProductGraph>> resolve() const {
    if (auto p = build_product()) {
      auto graph_copy = p->graph();
      return {std::move(graph_copy), std::move(p)};
    }
    if (graph.empty()) throw wtc::error(wtc::errc::invalid_argument, "--graph or --product is required");
    return {load_graph(graph), std::nullopt};
  }
};

// Sorted ids on one line, or "id label" rows for an in-session product.
void print_set(std::ostream& out, const wtc::VertexSet& s, const std::optional<wtc::ProductGraph>& product) {
  if (!product) {
    out << s.to_string() << '\n';
    return;
  }
  for (auto v : s) out << v << '\t' << product->label_string(v) << '\n';
}

std::vector<wtc::VertexId> parse_id_list(const std::string& text) {
  std::vector<wtc::VertexId> ids;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    std::stringstream one(item);
    wtc::VertexId id = 0;
    if (!(one >> id)) throw wtc::error(wtc::errc::invalid_argument, "bad vertex id '" + item + "'");
    ids.push_back(id);
  }
  return ids;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw wtc::error(wtc::errc::invalid_argument, "cannot write " + path);
  out << text;
}

std::string format_graph(const wtc::Graph& g, const std::optional<wtc::ProductGraph>& product,
                         const std::string& format) {
  if (format == "g6") return wtc::encode_graph6(g) + '\n';
  if (format == "edges") return wtc::write_edge_list(g);
  if (product) return wtc::write_dot(g, [&](wtc::VertexId v) { return product->label_string(v); });
  if (g.has_names()) return wtc::write_dot(g, [&](wtc::VertexId v) { return g.name(v); });
  return wtc::write_dot(g);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weakly toll convexity toolkit"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help");  // -h would clash with --h

  // interval
  auto* interval_cmd = app.add_subcommand("interval", "interval between two vertices");
  GraphInput interval_in;
  interval_in.add_to(interval_cmd);
  std::string kind = "wt";
  wtc::VertexId u = 0, v = 0;
  bool report = false;
  interval_cmd->add_option("--kind", kind, "wt | swt | toll | mono | geo")->check(CLI::IsMember(interval_kinds));
  interval_cmd->add_option("--u", u)->required();
  interval_cmd->add_option("--v", v)->required();
  interval_cmd->add_flag("--report", report, "also print X, X_u, X_v");

  // invariant
  auto* invariant_cmd = app.add_subcommand("invariant", "weakly toll number or hull number");
  GraphInput invariant_in;
  invariant_in.add_to(invariant_cmd);
  std::string what = "wtn";
  bool witness = false;
  invariant_cmd->add_option("--what", what, "wtn | wth")->check(CLI::IsMember({"wtn", "wth"}));
  invariant_cmd->add_flag("--witness", witness, "print a minimum set as well");

  // hull
  auto* hull_cmd = app.add_subcommand("hull", "convex hull of a vertex set");
  GraphInput hull_in;
  hull_in.add_to(hull_cmd);
  std::string set_text;
  std::string hull_kind = "wt";
  hull_cmd->add_option("--set", set_text, "comma separated vertex ids")->required();
  hull_cmd->add_option("--kind", hull_kind)->check(CLI::IsMember(interval_kinds));

  // product
  auto* product_cmd = app.add_subcommand("product", "build a graph product");
  std::string product_kind, product_g, product_out, product_format = "g6";
  std::vector<std::string> product_h;
  bool product_labels = false;
  product_cmd->add_option("--kind", product_kind, "lex | cart | strong | corona | gcorona")
      ->required()
      ->check(CLI::IsMember(product_kinds));
  product_cmd->add_option("--g", product_g)->required();
  product_cmd->add_option("--h", product_h, "repeat once per base vertex for gcorona")->required();
  product_cmd->add_option("--out", product_out, "output file (default stdout)");
  product_cmd->add_option("--format", product_format)->check(CLI::IsMember({"g6", "edges", "dot"}));
  product_cmd->add_flag("--labels", product_labels, "print the id/label table to stdout");

  // export
  auto* export_cmd = app.add_subcommand("export", "DOT export or graph6 corpus");
  GraphInput export_in;
  export_in.add_to(export_cmd);
  std::string dot_out, corpus_out;
  std::size_t corpus_max_n = 6;
  export_cmd->add_option("--dot", dot_out, "write the graph as DOT");
  export_cmd->add_option("--corpus", corpus_out, "write all connected graphs up to --max-n as graph6 lines");
  export_cmd->add_option("--max-n", corpus_max_n);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run verification checks");
  std::string suite = "all", spec_path, report_out, summary_out;
  bool list = false;
  verify_cmd->add_option("--suite", suite, "all, a group name or a check id");
  verify_cmd->add_option("--spec", spec_path, "key = value corpus spec");
  verify_cmd->add_option("--out", report_out, "JSON-lines report (default stdout)");
  verify_cmd->add_option("--summary", summary_out, "CSV summary file ('-' for stdout)");
  verify_cmd->add_flag("--list", list, "list groups and checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  }

  try {
    if (*interval_cmd) {
      const auto [g, product] = interval_in.resolve();
      const auto w = wtc::interval(g, u, v, interval_kinds.at(kind));
      print_set(std::cout, w, product);
      if (report) {
        const auto r = wtc::make_report(g, u, v, w, false);
        std::cout << "X: " << r.x.to_string() << '\n'
                  << "X_u: " << r.x_u.to_string() << '\n'
                  << "X_v: " << r.x_v.to_string() << '\n';
      }
    } else if (*invariant_cmd) {
      const auto [g, product] = invariant_in.resolve();
      const auto r = what == "wtn" ? wtc::wtn(g) : wtc::wth(g);
      std::cout << r.number << '\n';
      if (witness) print_set(std::cout, r.witness, product);
    } else if (*hull_cmd) {
      const auto [g, product] = hull_in.resolve();
      print_set(std::cout, wtc::hull(g, wtc::VertexSet::from_range(g.order(), parse_id_list(set_text)), interval_kinds.at(hull_kind)),
                product);
    } else if (*product_cmd) {
      const auto p = GraphInput::make_product(product_kinds.at(product_kind), product_g, product_h);
      write_text(product_out, format_graph(p.graph(), p, product_format));
      if (product_labels)
        for (wtc::VertexId x = 0; x < p.graph().order(); ++x) std::cout << x << '\t' << p.label_string(x) << '\n';
    } else if (*export_cmd) {
      if (dot_out.empty() == corpus_out.empty()) {
        std::cerr << "export: give exactly one of --dot or --corpus\n";
        return exit_usage;
      }
      if (!corpus_out.empty()) {
        write_text(corpus_out, wtc::write_graph6_list(wtc::connected_graphs_up_to(corpus_max_n)));
      } else {
        const auto [g, product] = export_in.resolve();
        write_text(dot_out, format_graph(g, product, "dot"));
      }
    } else if (*verify_cmd) {
      namespace wv = wtc::verify;
      if (list) {
        for (const auto& [name, ids] : wv::suite_groups()) {
          std::cout << name << ':';
          for (const auto& id : ids) std::cout << ' ' << id;
          std::cout << '\n';
        }
        for (const auto& c : wv::check_catalog()) std::cout << c.id << '\t' << c.statement << '\n';
        return 0;
      }
      if (!wv::is_known_suite(suite)) {
        std::cerr << "verify: unknown suite '" << suite << "' (see --list)\n";
        return exit_usage;
      }
      const auto spec = spec_path.empty() ? wv::CorpusSpec{} : wv::CorpusSpec::from_file(spec_path);
      const auto verdicts = wv::run_suite(suite, spec);
      write_text(report_out, wv::to_json_lines(verdicts, spec.timing));
      const auto summary = wv::summarize(verdicts);
      if (!summary_out.empty()) write_text(summary_out, wv::to_csv(summary, spec.timing));
      std::cerr << "verify: " << summary.total << " verdicts, " << summary.match << " match, " << summary.mismatch
                << " mismatch, " << summary.skipped << " skipped\n";
      return summary.exit_status();
    }
  } catch (const wtc::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
