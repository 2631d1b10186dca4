#pragma once

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <istream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wtc/closed_forms.hpp"
#include "wtc/convexity.hpp"
#include "wtc/corpus.hpp"
#include "wtc/generators.hpp"
#include "wtc/graph.hpp"
#include "wtc/graph_io.hpp"
#include "wtc/intervals.hpp"
#include "wtc/oracle.hpp"
#include "wtc/products.hpp"

namespace wtc::verify {

// Corpus and sampling parameters. Read from a flat "key = value" file; list
// values are comma separated; '#' starts a comment.
struct CorpusSpec {
  std::size_t exhaustive_max_n = 6;
  std::size_t random_graph_count = 300;
  std::size_t random_min_n = 7;
  std::size_t random_max_n = 8;
  std::vector<double> edge_probabilities{0.2, 0.35, 0.5, 0.65};
  std::uint64_t seed = 20240901;
  std::size_t lemma_samples = 200;
  std::size_t theorem_samples = 30;
  std::size_t generalized_samples = 10;
  std::size_t product_samples = 20;
  std::size_t factor_min_n = 3;
  std::size_t factor_max_n = 5;
  std::size_t walk_budget_extra = 2;  // oracle budget is 2n + extra
  std::size_t convexity_max_n = 5;
  std::size_t hull_samples = 1000;
  std::size_t hull_max_n = 8;
  std::size_t example_samples = 50;
  std::string corpus_file;  // graph6 list replacing the generated small-graph corpus
  bool timing = false;

  static constexpr std::size_t max_oracle_order = 9;
  static constexpr std::size_t max_product_order = 42;

  // Refuses parameters whose exact searches would not finish at desk scale.
  void validate() const {
    auto refuse = [](const std::string& why) { throw error(errc::infeasible_spec, why); };
    if (exhaustive_max_n > 6) refuse("exhaustive_max_n above 6");
    if (random_min_n < 1 || random_min_n > random_max_n) refuse("random_min_n must lie in [1, random_max_n]");
    if (random_max_n > max_oracle_order) refuse("random_max_n above the oracle limit of 9 vertices");
    if (factor_min_n < 3 || factor_min_n > factor_max_n)
      refuse("factor_min_n must be at least 3 (non-complete factors) and at most factor_max_n");
    if (factor_max_n * (factor_max_n + 1) > max_product_order) refuse("factor_max_n gives products above 42 vertices");
    if (convexity_max_n > 6) refuse("convexity_max_n above 6");
    if (hull_max_n < 2 || hull_max_n > 12) refuse("hull_max_n must lie in [2, 12]");
    if (walk_budget_extra < 2) refuse("walk_budget_extra below 2 leaves no room for the stabilisation check");
    if (edge_probabilities.empty()) refuse("no edge probabilities");
    for (double p : edge_probabilities)
      if (!(p > 0.0 && p <= 1.0)) refuse("edge probabilities must lie in (0, 1]");
  }

  static CorpusSpec parse(std::istream& in) {
    CorpusSpec spec;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      const auto t = wtc::detail::trim(line);
      if (t.empty()) continue;
      const auto eq = t.find('=');
      if (eq == std::string_view::npos)
        throw error(errc::invalid_argument, "line " + std::to_string(line_no) + ": expected key = value");
      spec.set(std::string(wtc::detail::trim(t.substr(0, eq))), std::string(wtc::detail::trim(t.substr(eq + 1))));
    }
    return spec;
  }

  static CorpusSpec from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::invalid_argument, "cannot open spec file " + path);
    return parse(in);
  }

  void set(const std::string& key, const std::string& value) {
    auto as_size = [&]() -> std::size_t {
      std::size_t pos = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(value, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != value.size() || value.empty() || value.front() == '-')
        throw error(errc::invalid_argument, key + ": expected a non-negative integer, got '" + value + "'");
      return static_cast<std::size_t>(v);
    };
    static const std::map<std::string, std::size_t CorpusSpec::*> sizes{
        {"exhaustive_max_n", &CorpusSpec::exhaustive_max_n},
        {"random_graph_count", &CorpusSpec::random_graph_count},
        {"random_min_n", &CorpusSpec::random_min_n},
        {"random_max_n", &CorpusSpec::random_max_n},
        {"lemma_samples", &CorpusSpec::lemma_samples},
        {"theorem_samples", &CorpusSpec::theorem_samples},
        {"generalized_samples", &CorpusSpec::generalized_samples},
        {"product_samples", &CorpusSpec::product_samples},
        {"factor_min_n", &CorpusSpec::factor_min_n},
        {"factor_max_n", &CorpusSpec::factor_max_n},
        {"walk_budget_extra", &CorpusSpec::walk_budget_extra},
        {"convexity_max_n", &CorpusSpec::convexity_max_n},
        {"hull_samples", &CorpusSpec::hull_samples},
        {"hull_max_n", &CorpusSpec::hull_max_n},
        {"example_samples", &CorpusSpec::example_samples},
    };
    if (auto it = sizes.find(key); it != sizes.end()) {
      this->*(it->second) = as_size();
    } else if (key == "seed") {
      seed = as_size();
    } else if (key == "corpus_file") {
      corpus_file = value;
    } else if (key == "timing") {
      if (value != "true" && value != "false") throw error(errc::invalid_argument, "timing: expected true or false");
      timing = value == "true";
    } else if (key == "edge_probabilities") {
      edge_probabilities.clear();
      std::stringstream ss(value);
      std::string item;
      while (std::getline(ss, item, ',')) {
        try {
          edge_probabilities.push_back(std::stod(std::string(wtc::detail::trim(item))));
        } catch (const std::exception&) {
          throw error(errc::invalid_argument, "edge_probabilities: bad number '" + item + "'");
        }
      }
    } else {
      throw error(errc::invalid_argument, "unknown spec key '" + key + "'");
    }
  }
};

enum class Status { match, mismatch, skipped };

constexpr std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::match: return "match";
    case Status::mismatch: return "mismatch";
    case Status::skipped: return "skipped";
  }
  return "unknown";
}

struct Verdict {
  std::string check_id;
  nlohmann::json instance = nlohmann::json::object();
  std::string predicted;
  std::string observed;
  Status status = Status::match;
  std::string reason;  // why skipped
  std::string note;    // sub-case tag, counted separately in summaries
  double runtime_ms = 0.0;
};

inline nlohmann::json to_json(const Verdict& v, bool timing) {
  nlohmann::json j{{"check", v.check_id},       {"instance", v.instance}, {"predicted", v.predicted},
                   {"observed", v.observed},    {"status", to_string(v.status)}};
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (!v.note.empty()) j["note"] = v.note;
  if (timing) j["runtime_ms"] = v.runtime_ms;
  return j;
}

inline std::string to_json_lines(const std::vector<Verdict>& verdicts, bool timing) {
  std::string out;
  for (const auto& v : verdicts) out += to_json(v, timing).dump() + '\n';
  return out;
}

struct CheckInfo {
  std::string_view id;
  std::string_view statement;
};

inline const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> catalog{
      {"oracle-wt", "weakly toll interval engine equals the bounded-walk oracle"},
      {"oracle-swt", "semi weakly toll interval engine equals the bounded-walk oracle"},
      {"oracle-toll", "toll interval engine equals the bounded-walk oracle"},
      {"star-example", "K_{1,3}: WT of two leaves is V, toll interval misses the third leaf"},
      {"complete-wtn", "wtn(K_n) = n"},
      {"tree-wtn", "wtn(T) = 2 for every tree"},
      {"clique-bridge-wtn", "two K_n joined through a path of length 2 have wtn 2n - 2"},
      {"two-leaves-wtn", "graphs with two degree-1 vertices have wtn 2"},
      {"neighbor-extension", "outside N[u]|N[v], a neighbour of WT(u,v)\\{u,v} lies in WT(u,v)"},
      {"max-interval-decomposition", "at a maximum non-adjacent pair, X_u and X_v partition X"},
      {"wtn-two-criterion", "wtn > 2 iff every maximum non-adjacent pair has X_u | X_v non-empty"},
      {"lex-same-layer", "WT in G[H] between vertices of one H-layer"},
      {"lex-cross-layer", "WT in G[H] between vertices of distinct non-adjacent H-layers"},
      {"lex-wtn", "wtn(G[H]) = 2 if wtn(H) = 2, otherwise 3"},
      {"lex-wth", "wth(G[H]) = 2"},
      {"corona-same-copy", "WT in G o H between vertices of one copy of H"},
      {"corona-cross-copies", "WT in G o H between vertices of different copies of H"},
      {"corona-base-pair", "WT in G o H between two base vertices"},
      {"corona-mixed", "WT in G o H between a base vertex and a copy vertex, via SWT_G"},
      {"corona-base-restriction", "WT in G o H restricted to V(G) equals WT_G for non-adjacent base pairs"},
      {"corona-wtn", "wtn(G o H) = 2 if wtn(H) = 2, otherwise 3"},
      {"corona-wth", "wth(G o H) = 2"},
      {"generalized-corona-wtn", "generalized corona: wtn = 2 if some wtn(H_i) = 2, else at most 3"},
      {"generalized-corona-wth", "generalized corona: wth = 2"},
      {"cartesian-wtn", "wtn of a Cartesian product of connected non-trivial graphs is 2"},
      {"strong-wtn-bound", "wtn of a strong product of connected non-complete graphs is at most 3"},
      {"convexity-chain", "WT-convex => toll-convex => monophonic-convex => geodesic-convex"},
      {"hull-closure-axioms", "the weakly toll hull is extensive, idempotent and monotone"},
      {"hull-vs-wtn", "wth(G) <= wtn(G)"},
  };
  return catalog;
}

// Named groups of checks accepted by run_suite besides single ids.
inline const std::map<std::string, std::vector<std::string>, std::less<>>& suite_groups() {
  static const std::map<std::string, std::vector<std::string>, std::less<>> groups{
      {"oracle", {"oracle-wt", "oracle-swt", "oracle-toll"}},
      {"examples", {"star-example", "complete-wtn", "tree-wtn", "clique-bridge-wtn", "two-leaves-wtn"}},
      {"interval-lemmas", {"neighbor-extension", "max-interval-decomposition"}},
      {"wtn-criterion", {"wtn-two-criterion"}},
      {"lex-intervals", {"lex-same-layer", "lex-cross-layer"}},
      {"lex-theorems", {"lex-wtn", "lex-wth"}},
      {"corona-intervals",
       {"corona-same-copy", "corona-cross-copies", "corona-base-pair", "corona-mixed", "corona-base-restriction"}},
      {"corona-theorems", {"corona-wtn", "corona-wth", "generalized-corona-wtn", "generalized-corona-wth"}},
      {"cartesian-strong", {"cartesian-wtn", "strong-wtn-bound"}},
      {"convexity-chain", {"convexity-chain"}},
      {"hull", {"hull-closure-axioms", "hull-vs-wtn"}},
  };
  return groups;
}

inline bool is_known_check(std::string_view id) {
  for (const auto& c : check_catalog())
    if (c.id == id) return true;
  return false;
}

namespace detail {

inline bool log_enabled() {
  static const bool on = [] {
    const char* v = std::getenv("WTCONV_LOG");
    return v != nullptr && std::string_view(v) != "" && std::string_view(v) != "0" && std::string_view(v) != "off";
  }();
  return on;
}

// FNV-1a, so each check draws from its own stream regardless of suite.
inline std::uint64_t check_seed(std::uint64_t base, std::string_view id) {
  std::uint64_t h = 1469598103934665603ULL ^ base;
  for (char c : id) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string set_text(const VertexSet& s) { return "{" + s.to_string() + "}"; }

class Timer {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace detail

// Runs checks against one spec; corpora are built once and shared.
class Runner {
 public:
  explicit Runner(CorpusSpec spec) : spec_(std::move(spec)) { spec_.validate(); }

  const CorpusSpec& spec() const { return spec_; }

  // Connected graphs up to exhaustive_max_n (or the corpus file) followed by
  // the seeded random graphs.
  const std::vector<Graph>& small_corpus() {
    if (!small_corpus_) {
      std::vector<Graph> graphs;
      if (!spec_.corpus_file.empty()) {
        std::ifstream in(spec_.corpus_file);
        if (!in) throw error(errc::invalid_argument, "cannot open corpus file " + spec_.corpus_file);
        graphs = parse_graph6_list(in);
        for (const auto& g : graphs)
          if (g.order() > CorpusSpec::max_oracle_order)
            throw error(errc::infeasible_spec, "corpus file holds a graph above the oracle limit");
      } else {
        graphs = connected_graphs_up_to(spec_.exhaustive_max_n);
      }
      auto random = random_connected_corpus(spec_.random_graph_count, spec_.random_min_n, spec_.random_max_n,
                                            spec_.edge_probabilities, detail::check_seed(spec_.seed, "corpus"));
      graphs.insert(graphs.end(), std::make_move_iterator(random.begin()), std::make_move_iterator(random.end()));
      small_corpus_ = std::move(graphs);
    }
    return *small_corpus_;
  }

  std::vector<Verdict> run(std::string_view id) {
    if (!is_known_check(id)) throw error(errc::invalid_argument, "unknown check '" + std::string(id) + "'");
    if (detail::log_enabled()) std::cerr << "[verify] running " << id << '\n';
    std::vector<Verdict> out;
    const auto stream_seed = detail::check_seed(spec_.seed, id);
    const auto emit = [&](Verdict v) {
      v.check_id = std::string(id);
      if (!v.instance.contains("seed")) v.instance["seed"] = stream_seed;
      out.push_back(std::move(v));
    };
    std::mt19937_64 rng(stream_seed);

    if (id == "oracle-wt") oracle_check(IntervalKind::weakly_toll, oracle::WalkKind::weakly_toll, emit);
    else if (id == "oracle-swt") oracle_check(IntervalKind::semi_weakly_toll, oracle::WalkKind::semi_weakly_toll, emit);
    else if (id == "oracle-toll") oracle_check(IntervalKind::toll, oracle::WalkKind::toll, emit);
    else if (id == "star-example") star_example(emit);
    else if (id == "complete-wtn") complete_wtn(emit);
    else if (id == "tree-wtn") tree_wtn(rng, emit);
    else if (id == "clique-bridge-wtn") clique_bridge_wtn(emit);
    else if (id == "two-leaves-wtn") two_leaves_wtn(rng, emit);
    else if (id == "neighbor-extension") corpus_predicate(id, emit);
    else if (id == "max-interval-decomposition") corpus_predicate(id, emit);
    else if (id == "wtn-two-criterion") corpus_predicate(id, emit);
    else if (id == "lex-same-layer") lex_same_layer(rng, emit);
    else if (id == "lex-cross-layer") lex_cross_layer(rng, emit);
    else if (id == "lex-wtn" || id == "lex-wth") product_theorem(id, rng, emit);
    else if (id == "corona-same-copy") corona_lemma(id, rng, emit);
    else if (id == "corona-cross-copies") corona_lemma(id, rng, emit);
    else if (id == "corona-base-pair") corona_lemma(id, rng, emit);
    else if (id == "corona-mixed") corona_lemma(id, rng, emit);
    else if (id == "corona-base-restriction") corona_lemma(id, rng, emit);
    else if (id == "corona-wtn" || id == "corona-wth") product_theorem(id, rng, emit);
    else if (id == "generalized-corona-wtn" || id == "generalized-corona-wth") generalized_corona_check(id, rng, emit);
    else if (id == "cartesian-wtn") cartesian_check(rng, emit);
    else if (id == "strong-wtn-bound") strong_check(rng, emit);
    else if (id == "convexity-chain") convexity_chain(emit);
    else if (id == "hull-closure-axioms") hull_axioms(rng, emit);
    else if (id == "hull-vs-wtn") hull_vs_wtn(emit);
    return out;
  }

  // "all", a group name from suite_groups() or a single check id.
  std::vector<Verdict> run_suite(std::string_view suite) {
    std::vector<std::string> ids;
    if (suite == "all") {
      for (const auto& c : check_catalog()) ids.emplace_back(c.id);
    } else if (auto it = suite_groups().find(suite); it != suite_groups().end()) {
      ids = it->second;
    } else {
      return run(suite);
    }
    std::vector<Verdict> out;
    for (const auto& id : ids) {
      auto part = run(id);
      out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
  }

 private:
  using Emit = std::function<void(Verdict)>;

  static Verdict compare(nlohmann::json instance, const Prediction& p, const VertexSet& observed,
                         double runtime_ms) {
    Verdict v;
    v.instance = std::move(instance);
    v.runtime_ms = runtime_ms;
    if (!p.applicable) {
      v.status = Status::skipped;
      v.reason = p.reason;
      return v;
    }
    v.predicted = detail::set_text(*p.set);
    v.observed = detail::set_text(observed);
    v.status = p.holds_for(observed) ? Status::match : Status::mismatch;
    return v;
  }

  static Verdict compare(nlohmann::json instance, const Prediction& p, std::size_t observed, double runtime_ms) {
    Verdict v;
    v.instance = std::move(instance);
    v.runtime_ms = runtime_ms;
    if (!p.applicable) {
      v.status = Status::skipped;
      v.reason = p.reason;
      return v;
    }
    v.predicted = (p.target == PredictionTarget::wtn_upper_bound ? "<= " : "") + std::to_string(p.number);
    v.observed = std::to_string(observed);
    v.status = p.holds_for(observed) ? Status::match : Status::mismatch;
    return v;
  }

  static Verdict exact(nlohmann::json instance, std::string predicted, std::string observed, double runtime_ms) {
    Verdict v;
    v.instance = std::move(instance);
    v.status = predicted == observed ? Status::match : Status::mismatch;
    v.predicted = std::move(predicted);
    v.observed = std::move(observed);
    v.runtime_ms = runtime_ms;
    return v;
  }

  static Verdict skipped(nlohmann::json instance, std::string reason) {
    Verdict v;
    v.instance = std::move(instance);
    v.status = Status::skipped;
    v.reason = std::move(reason);
    return v;
  }

  Graph sample_graph(std::mt19937_64& rng, std::size_t min_n, std::size_t max_n, bool noncomplete) const {
    while (true) {
      const auto n = std::uniform_int_distribution<std::size_t>(min_n, max_n)(rng);
      const auto& ps = spec_.edge_probabilities;
      const auto p = ps[std::uniform_int_distribution<std::size_t>(0, ps.size() - 1)(rng)];
      auto g = random_connected_graph(n, p, rng());
      if (!noncomplete || !is_complete(g)) return g;
    }
  }
  Graph sample_factor(std::mt19937_64& rng) const {
    return sample_graph(rng, spec_.factor_min_n, spec_.factor_max_n, true);
  }

  static VertexId pick(std::mt19937_64& rng, std::size_t n) {
    return std::uniform_int_distribution<VertexId>(0, n - 1)(rng);
  }

  // Draws instances until `target` applicable ones were seen (or the
  // attempt cap is hit). `one` returns the verdict for attempt k.
  void sample_until(std::size_t target, const std::function<Verdict(std::size_t)>& one, const Emit& emit) const {
    std::size_t applicable = 0;
    const std::size_t cap = 50 * target + 50;
    for (std::size_t k = 0; applicable < target && k < cap; ++k) {
      auto v = one(k);
      if (v.status != Status::skipped) ++applicable;
      emit(std::move(v));
    }
  }

  void oracle_check(IntervalKind kind, oracle::WalkKind walk, const Emit& emit) {
    const auto& corpus = small_corpus();
    for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
      const auto& g = corpus[idx];
      detail::Timer timer;
      const auto n = g.order();
      const oracle::WalkBudget budget(2 * n + spec_.walk_budget_extra), shorter(2 * n + spec_.walk_budget_extra - 2);
      nlohmann::json inst{{"graph", encode_graph6(g)}, {"index", idx}, {"budget", budget.max_len}};
      std::optional<Verdict> bad;
      std::size_t pairs = 0;
      for (VertexId u = 0; u < n && !bad; ++u)
        for (VertexId v = 0; v < n && !bad; ++v) {
          if (u == v) continue;
          ++pairs;
          const auto engine = interval(g, u, v, kind);
          const auto ref = oracle::oracle_interval(g, u, v, walk, budget);
          const auto ref_short = oracle::oracle_interval(g, u, v, walk, shorter);
          if (engine != ref || ref != ref_short) {
            auto i2 = inst;
            i2["u"] = u;
            i2["v"] = v;
            Verdict verdict;
            verdict.instance = i2;
            verdict.status = Status::mismatch;
            verdict.predicted = detail::set_text(engine);
            verdict.observed = detail::set_text(ref);
            if (ref != ref_short) verdict.note = "budget-unstable:" + detail::set_text(ref_short);
            bad = verdict;
          }
        }
      if (bad) {
        bad->runtime_ms = timer.elapsed_ms();
        emit(*bad);
      } else {
        const auto text = std::to_string(pairs) + " ordered pairs";
        emit(exact(inst, text, text, timer.elapsed_ms()));
      }
    }
  }

  void star_example(const Emit& emit) {
    // a = 0, b = 1 (centre), c = 2, d = 3.
    const auto g = Graph::from_edge_list(4, {{1, 0}, {1, 2}, {1, 3}});
    const nlohmann::json inst{{"graph", encode_graph6(g)}, {"u", 0}, {"v", 2}};
    detail::Timer t1;
    auto i1 = inst;
    i1["kind"] = "wt";
    emit(exact(i1, "{0 1 2 3}", detail::set_text(weakly_toll_interval(g, 0, 2)), t1.elapsed_ms()));
    detail::Timer t2;
    auto i2 = inst;
    i2["kind"] = "toll";
    emit(exact(i2, "{0 1 2}", detail::set_text(toll_interval(g, 0, 2)), t2.elapsed_ms()));
  }

  void complete_wtn(const Emit& emit) {
    for (std::size_t n = 3; n <= 6; ++n) {
      detail::Timer t;
      const auto g = complete_graph(n);
      emit(exact({{"graph", encode_graph6(g)}}, std::to_string(n), std::to_string(wtn(g).number), t.elapsed_ms()));
    }
  }

  void tree_wtn(std::mt19937_64& rng, const Emit& emit) {
    for (std::size_t k = 0; k < spec_.example_samples; ++k) {
      const auto n = std::uniform_int_distribution<std::size_t>(2, 12)(rng);
      const auto seed = rng();
      detail::Timer t;
      const auto g = random_tree(n, seed);
      emit(exact({{"graph", encode_graph6(g)}, {"seed", seed}}, "2", std::to_string(wtn(g).number), t.elapsed_ms()));
    }
  }

  void clique_bridge_wtn(const Emit& emit) {
    for (std::size_t k : {3, 4}) {
      detail::Timer t;
      const auto g = two_clique_bridge(k);
      emit(exact({{"graph", encode_graph6(g)}, {"k", k}}, std::to_string(2 * k - 2), std::to_string(wtn(g).number),
                 t.elapsed_ms()));
    }
  }

  // Random connected graph plus two pendant vertices.
  void two_leaves_wtn(std::mt19937_64& rng, const Emit& emit) {
    for (std::size_t k = 0; k < spec_.example_samples; ++k) {
      detail::Timer t;
      const auto core = sample_graph(rng, 1, 8, false);
      const auto n = core.order();
      auto edges = core.edges();
      edges.emplace_back(pick(rng, n), n);
      edges.emplace_back(pick(rng, n), n + 1);
      const auto g = Graph::from_edge_list(n + 2, edges);
      std::size_t leaves = 0;
      for (VertexId v = 0; v < g.order(); ++v) leaves += g.degree(v) == 1 ? 1 : 0;
      nlohmann::json inst{{"graph", encode_graph6(g)}, {"leaves", leaves}};
      emit(exact(inst, "2", std::to_string(wtn(g).number), t.elapsed_ms()));
    }
  }

  void corpus_predicate(std::string_view id, const Emit& emit) {
    const auto& corpus = small_corpus();
    for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
      const auto& g = corpus[idx];
      detail::Timer t;
      nlohmann::json inst{{"graph", encode_graph6(g)}, {"index", idx}};
      if (id != "neighbor-extension" && is_complete(g)) {
        emit(skipped(inst, "complete graph"));
        continue;
      }
      const auto table = interval_table(g, IntervalKind::weakly_toll);
      if (id == "neighbor-extension") {
        emit(exact(inst, "holds", check_neighbor_extension(g, table) ? "holds" : "violated", t.elapsed_ms()));
      } else if (id == "max-interval-decomposition") {
        std::string observed = "holds";
        for (const auto& r : maximum_interval_pairs(g, table)) {
          if (g.adjacent(r.u, r.v)) continue;
          if (r.x_u.intersects(r.x_v) || (r.x_u | r.x_v) != r.x) {
            observed = "pair " + std::to_string(r.u) + "," + std::to_string(r.v) + ": X=" + detail::set_text(r.x) +
                       " X_u=" + detail::set_text(r.x_u) + " X_v=" + detail::set_text(r.x_v);
            break;
          }
        }
        emit(exact(inst, "holds", observed, t.elapsed_ms()));
      } else {
        bool all_missing = true;
        for (const auto& r : maximum_interval_pairs(g, table))
          if (!g.adjacent(r.u, r.v) && (r.x_u | r.x_v).empty()) all_missing = false;
        const auto number = wtn(g, table).number;
        auto v = exact(inst, std::string("wtn>2: ") + (all_missing ? "true" : "false"),
                       std::string("wtn>2: ") + (number > 2 ? "true" : "false"), t.elapsed_ms());
        v.note = number > 2 ? "wtn-above-two" : "wtn-two";
        emit(std::move(v));
      }
    }
  }

  void lex_same_layer(std::mt19937_64& rng, const Emit& emit) {
    sample_until(
        spec_.lemma_samples,
        [&](std::size_t k) {
          detail::Timer t;
          const auto g = sample_factor(rng), h = sample_factor(rng);
          const auto gv = pick(rng, g.order()), h1 = pick(rng, h.order()), h2 = pick(rng, h.order());
          nlohmann::json inst{{"G", encode_graph6(g)}, {"H", encode_graph6(h)}, {"g", gv}, {"h1", h1}, {"h2", h2},
                              {"index", k}};
          const auto p = lex_interval_same_layer(g, h, gv, h1, h2);
          if (!p.applicable) return compare(inst, p, VertexSet(), 0.0);
          const auto prod = lexicographic(g, h);
          return compare(inst, p,
                         weakly_toll_interval(prod.graph(), prod.pair_vertex(gv, h1), prod.pair_vertex(gv, h2)),
                         t.elapsed_ms());
        },
        emit);
  }

  void lex_cross_layer(std::mt19937_64& rng, const Emit& emit) {
    sample_until(
        spec_.lemma_samples,
        [&](std::size_t k) {
          detail::Timer t;
          const auto g = sample_factor(rng), h = sample_factor(rng);
          const auto g1 = pick(rng, g.order()), g2 = pick(rng, g.order());
          const auto h1 = pick(rng, h.order()), h2 = pick(rng, h.order());
          nlohmann::json inst{{"G", encode_graph6(g)}, {"H", encode_graph6(h)}, {"g1", g1}, {"h1", h1},
                              {"g2", g2},           {"h2", h2},           {"index", k}};
          const auto p = lex_interval_cross_layer(g, h, g1, h1, g2, h2);
          if (!p.applicable) return compare(inst, p, VertexSet(), 0.0);
          const auto prod = lexicographic(g, h);
          auto v = compare(inst, p,
                           weakly_toll_interval(prod.graph(), prod.pair_vertex(g1, h1), prod.pair_vertex(g2, h2)),
                           t.elapsed_ms());
          if (h1 == h2) v.note = "equal-fiber-coordinates";
          return v;
        },
        emit);
  }

  // Theorem checks draw H = P_3 and H = two_clique_bridge(3) at fixed
  // positions so both branches of the wtn dichotomy are always covered.
  Graph theorem_fiber(std::mt19937_64& rng, std::size_t k) const {
    if (k % 5 == 0) return path_graph(3);
    if (k % 5 == 1) return two_clique_bridge(3);
    return sample_factor(rng);
  }

  void product_theorem(std::string_view id, std::mt19937_64& rng, const Emit& emit) {
    const bool lex = id.starts_with("lex");
    const bool number_is_wtn = id.ends_with("wtn");
    for (std::size_t k = 0; k < spec_.theorem_samples; ++k) {
      detail::Timer t;
      const auto h = theorem_fiber(rng, k);
      // Keep products with the 7-vertex bridge below the exact-search limit.
      const auto g_max = std::min(spec_.factor_max_n, CorpusSpec::max_product_order / (lex ? h.order() : h.order() + 1));
      const auto g = sample_graph(rng, spec_.factor_min_n, std::max(g_max, spec_.factor_min_n), true);
      nlohmann::json inst{{"G", encode_graph6(g)}, {"H", encode_graph6(h)}, {"index", k}};
      const auto prod = lex ? lexicographic(g, h) : corona(g, h);
      const auto table = interval_table(prod.graph(), IntervalKind::weakly_toll);
      Prediction p;
      std::size_t observed = 0;
      if (number_is_wtn) {
        p = lex ? lex_wtn(g, h) : corona_wtn(g, h);
        observed = wtn(prod.graph(), table).number;
      } else {
        p = lex ? lex_wth(g, h) : corona_wth(g, h);
        observed = wth(prod.graph(), table).number;
      }
      auto v = compare(inst, p, observed, t.elapsed_ms());
      if (number_is_wtn && p.applicable) v.note = p.number == 2 ? "fiber-wtn-two" : "fiber-wtn-above-two";
      emit(std::move(v));
    }
  }

  void corona_lemma(std::string_view id, std::mt19937_64& rng, const Emit& emit) {
    sample_until(
        spec_.lemma_samples,
        [&](std::size_t k) {
          detail::Timer t;
          const auto g = sample_factor(rng), h = sample_factor(rng);
          nlohmann::json inst{{"G", encode_graph6(g)}, {"H", encode_graph6(h)}, {"index", k}};
          const auto prod = corona(g, h);
          const auto& pg = prod.graph();
          const auto i = pick(rng, g.order());
          if (id == "corona-same-copy") {
            const auto h1 = pick(rng, h.order()), h2 = pick(rng, h.order());
            inst["i"] = i;
            inst["h1"] = h1;
            inst["h2"] = h2;
            const auto p = corona_interval_same_copy(g, h, i, h1, h2);
            if (!p.applicable) return compare(inst, p, VertexSet(), 0.0);
            return compare(inst, p, weakly_toll_interval(pg, prod.copy_vertex(i, h1), prod.copy_vertex(i, h2)),
                           t.elapsed_ms());
          }
          const auto j = pick(rng, g.order());
          inst["i"] = i;
          inst["j"] = j;
          if (id == "corona-cross-copies") {
            const auto hk = pick(rng, h.order()), hl = pick(rng, h.order());
            inst["k"] = hk;
            inst["l"] = hl;
            const auto p = corona_interval_cross_copies(g, h, i, hk, j, hl);
            if (!p.applicable) return compare(inst, p, VertexSet(), 0.0);
            return compare(inst, p, weakly_toll_interval(pg, prod.copy_vertex(i, hk), prod.copy_vertex(j, hl)),
                           t.elapsed_ms());
          }
          if (id == "corona-base-pair") {
            const auto p = corona_interval_base_pair(g, h, i, j);
            if (!p.applicable) return compare(inst, p, VertexSet(), 0.0);
            auto v = compare(inst, p, weakly_toll_interval(pg, prod.base_vertex(i), prod.base_vertex(j)),
                             t.elapsed_ms());
            if (g.adjacent(i, j)) v.note = "adjacent-base-pair";
            return v;
          }
          if (id == "corona-base-restriction") {
            const auto p = corona_base_restriction(g, h, i, j);
            if (!p.applicable) return compare(inst, p, VertexSet(), 0.0);
            return compare(inst, p,
                           weakly_toll_interval(pg, prod.base_vertex(i), prod.base_vertex(j)) & prod.base_vertices(),
                           t.elapsed_ms());
          }
          // corona-mixed
          const auto hk = pick(rng, h.order());
          inst["k"] = hk;
          const auto p = corona_interval_mixed(g, h, i, j, hk);
          if (!p.applicable) return compare(inst, p, VertexSet(), 0.0);
          auto v = compare(inst, p, weakly_toll_interval(pg, prod.base_vertex(i), prod.copy_vertex(j, hk)),
                           t.elapsed_ms());
          if (i == j) v.note = "same-base";
          else if (g.adjacent(i, j)) v.note = "adjacent-base-pair";
          return v;
        },
        emit);
  }

  // Attached graphs are drawn from complete graphs, P_3, the paw (wtn 3)
  // and random admissible factors, so both the exact and the bound case
  // occur.
  void generalized_corona_check(std::string_view id, std::mt19937_64& rng, const Emit& emit) {
    const bool is_wtn = id.ends_with("wtn");
    const auto paw = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
    for (std::size_t k = 0; k < spec_.generalized_samples; ++k) {
      detail::Timer t;
      const auto g = sample_graph(rng, 2, spec_.factor_max_n, false);
      // Alternate samples avoid wtn-2 attachments altogether.
      const bool bound_case = k % 2 == 1;
      std::vector<Graph> fibers;
      for (VertexId i = 0; i < g.order(); ++i) {
        const auto choice = std::uniform_int_distribution<int>(0, bound_case ? 2 : 4)(rng);
        Graph f = choice == 0   ? complete_graph(std::uniform_int_distribution<std::size_t>(1, 3)(rng))
                  : choice == 1 ? paw
                  : choice == 2 ? complete_graph(2)
                  : choice == 3 ? path_graph(3)
                                : sample_factor(rng);
        fibers.push_back(std::move(f));
      }
      if (bound_case) fibers[pick(rng, g.order())] = paw;
      auto names = nlohmann::json::array();
      for (const auto& f : fibers) names.push_back(encode_graph6(f));
      nlohmann::json inst{{"G", encode_graph6(g)}, {"H", names}, {"index", k}};
      const auto p = is_wtn ? generalized_corona_wtn(g, fibers) : generalized_corona_wth(g, fibers);
      if (!p.applicable) {
        emit(compare(inst, p, 0, 0.0));
        continue;
      }
      const auto prod = wtc::generalized_corona(g, fibers);
      const auto table = interval_table(prod.graph(), IntervalKind::weakly_toll);
      const auto observed = is_wtn ? wtn(prod.graph(), table).number : wth(prod.graph(), table).number;
      auto v = compare(inst, p, observed, t.elapsed_ms());
      if (is_wtn) v.note = p.target == PredictionTarget::wtn_upper_bound ? "bound-only" : "exact";
      emit(std::move(v));
    }
  }

  void cartesian_check(std::mt19937_64& rng, const Emit& emit) {
    for (std::size_t k = 0; k < spec_.product_samples; ++k) {
      detail::Timer t;
      const auto g = sample_graph(rng, 2, spec_.factor_max_n, false);
      const auto h = sample_graph(rng, 2, spec_.factor_max_n, false);
      nlohmann::json inst{{"G", encode_graph6(g)}, {"H", encode_graph6(h)}, {"index", k}};
      const auto p = cartesian_wtn(g, h);
      emit(compare(inst, p, wtn(cartesian(g, h).graph()).number, t.elapsed_ms()));
    }
  }

  void strong_check(std::mt19937_64& rng, const Emit& emit) {
    for (std::size_t k = 0; k < spec_.product_samples; ++k) {
      detail::Timer t;
      const auto g = sample_factor(rng), h = sample_factor(rng);
      nlohmann::json inst{{"G", encode_graph6(g)}, {"H", encode_graph6(h)}, {"index", k}};
      const auto p = strong_wtn_bound(g, h);
      emit(compare(inst, p, wtn(strong(g, h).graph()).number, t.elapsed_ms()));
    }
  }

  void convexity_chain(const Emit& emit) {
    const auto graphs = connected_graphs_up_to(spec_.convexity_max_n);
    constexpr IntervalKind chain[] = {IntervalKind::weakly_toll, IntervalKind::toll, IntervalKind::monophonic,
                                      IntervalKind::geodesic};
    for (std::size_t idx = 0; idx < graphs.size(); ++idx) {
      const auto& g = graphs[idx];
      detail::Timer t;
      const auto n = g.order();
      std::vector<IntervalTable> tables;
      for (auto kind : chain) tables.push_back(interval_table(g, kind));
      std::string observed = "holds";
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n) && observed == "holds"; ++mask) {
        VertexSet s(n);
        for (VertexId x = 0; x < n; ++x)
          if ((mask >> x) & 1U) s.insert(x);
        bool prev = true;
        for (std::size_t c = 0; c < 4; ++c) {
          const bool convex = wtc::detail::closure_from_table(tables[c], s) == s;
          if (c > 0 && prev && !convex) {
            observed = detail::set_text(s) + " is " + std::string(to_string(chain[c - 1])) + "-convex but not " +
                       std::string(to_string(chain[c])) + "-convex";
            break;
          }
          prev = convex;
        }
      }
      emit(exact({{"graph", encode_graph6(g)}, {"index", idx}}, "holds", observed, t.elapsed_ms()));
    }
  }

  void hull_axioms(std::mt19937_64& rng, const Emit& emit) {
    for (std::size_t k = 0; k < spec_.hull_samples; ++k) {
      detail::Timer t;
      const auto g = sample_graph(rng, 2, spec_.hull_max_n, false);
      const auto n = g.order();
      VertexSet s(n), bigger(n);
      s.insert(pick(rng, n));
      std::bernoulli_distribution coin(0.3);
      for (VertexId x = 0; x < n; ++x)
        if (coin(rng)) s.insert(x);
      bigger = s;
      for (VertexId x = 0; x < n; ++x)
        if (coin(rng)) bigger.insert(x);
      const auto hs = hull(g, s, IntervalKind::weakly_toll);
      const auto hh = hull(g, hs, IntervalKind::weakly_toll);
      const auto hb = hull(g, bigger, IntervalKind::weakly_toll);
      std::string observed = "holds";
      if (!s.is_subset_of(hs)) observed = "not extensive";
      else if (hh != hs) observed = "not idempotent";
      else if (!hs.is_subset_of(hb)) observed = "not monotone";
      emit(exact({{"graph", encode_graph6(g)}, {"S", s.to_vector()}, {"T", bigger.to_vector()}, {"index", k}},
                 "holds", observed, t.elapsed_ms()));
    }
  }

  void hull_vs_wtn(const Emit& emit) {
    const auto& corpus = small_corpus();
    for (std::size_t idx = 0; idx < corpus.size(); ++idx) {
      const auto& g = corpus[idx];
      nlohmann::json inst{{"graph", encode_graph6(g)}, {"index", idx}};
      if (g.order() < 2) {
        emit(skipped(inst, "trivial graph"));
        continue;
      }
      detail::Timer t;
      const auto table = interval_table(g, IntervalKind::weakly_toll);
      const auto a = wth(g, table).number, b = wtn(g, table).number;
      Verdict v;
      v.instance = inst;
      v.predicted = "wth <= " + std::to_string(b);
      v.observed = "wth = " + std::to_string(a);
      v.status = a <= b ? Status::match : Status::mismatch;
      v.runtime_ms = t.elapsed_ms();
      emit(std::move(v));
    }
  }

  CorpusSpec spec_;
  std::optional<std::vector<Graph>> small_corpus_;
};

inline bool is_known_suite(std::string_view suite) {
  return suite == "all" || suite_groups().find(suite) != suite_groups().end() || is_known_check(suite);
}

inline std::vector<Verdict> run_check(std::string_view id, const CorpusSpec& spec) { return Runner(spec).run(id); }

inline std::vector<Verdict> run_suite(std::string_view suite, const CorpusSpec& spec) {
  return Runner(spec).run_suite(suite);
}

struct CheckSummary {
  std::string check_id;
  std::size_t total = 0, match = 0, mismatch = 0, skipped = 0;
  std::map<std::string, std::size_t> notes;
  double runtime_ms = 0.0;
};

struct Summary {
  std::vector<CheckSummary> checks;  // in first-seen order
  std::size_t total = 0, match = 0, mismatch = 0, skipped = 0;
  double runtime_ms = 0.0;

  int exit_status() const { return mismatch == 0 ? 0 : 1; }
  const CheckSummary* find(std::string_view id) const {
    for (const auto& c : checks)
      if (c.check_id == id) return &c;
    return nullptr;
  }
};

inline Summary summarize(const std::vector<Verdict>& verdicts) {
  Summary s;
  std::map<std::string, std::size_t> slot;
  for (const auto& v : verdicts) {
    auto [it, fresh] = slot.try_emplace(v.check_id, s.checks.size());
    if (fresh) {
      s.checks.emplace_back();
      s.checks.back().check_id = v.check_id;
    }
    auto& c = s.checks[it->second];
    ++c.total;
    ++s.total;
    switch (v.status) {
      case Status::match: ++c.match, ++s.match; break;
      case Status::mismatch: ++c.mismatch, ++s.mismatch; break;
      case Status::skipped: ++c.skipped, ++s.skipped; break;
    }
    if (!v.note.empty()) ++c.notes[v.note];
    c.runtime_ms += v.runtime_ms;
    s.runtime_ms += v.runtime_ms;
  }
  return s;
}

inline std::string to_csv(const Summary& s, bool timing) {
  std::ostringstream out;
  out << "check,total,match,mismatch,skipped,notes" << (timing ? ",runtime_ms" : "") << '\n';
  auto row = [&](const std::string& id, std::size_t total, std::size_t match, std::size_t mismatch,
                 std::size_t skipped, const std::map<std::string, std::size_t>& notes, double ms) {
    out << id << ',' << total << ',' << match << ',' << mismatch << ',' << skipped << ',';
    bool first = true;
    for (const auto& [note, count] : notes) {
      out << (first ? "" : ";") << note << '=' << count;
      first = false;
    }
    if (timing) out << ',' << ms;
    out << '\n';
  };
  for (const auto& c : s.checks) row(c.check_id, c.total, c.match, c.mismatch, c.skipped, c.notes, c.runtime_ms);
  row("TOTAL", s.total, s.match, s.mismatch, s.skipped, {}, s.runtime_ms);
  return out.str();
}

}  // namespace wtc::verify
