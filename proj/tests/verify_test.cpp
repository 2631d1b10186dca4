#include <sstream>

#include <gtest/gtest.h>

#include "wtc/verify.hpp"

using namespace wtc;
using namespace wtc::verify;

namespace {

CorpusSpec small_spec() {
  std::istringstream in(
      "exhaustive_max_n = 4\n"
      "random_graph_count = 5  # keep unit runs short\n"
      "lemma_samples = 10\n"
      "theorem_samples = 4\n"
      "generalized_samples = 4\n"
      "product_samples = 3\n"
      "hull_samples = 20\n"
      "example_samples = 5\n"
      "convexity_max_n = 4\n");
  return CorpusSpec::parse(in);
}

}  // namespace

TEST(CorpusSpec, ParsesKeysAndLists) {
  std::istringstream in("seed = 9\nedge_probabilities = 0.25, 0.5\ntiming = true\n\n# comment\n");
  auto spec = CorpusSpec::parse(in);
  EXPECT_EQ(spec.seed, 9u);
  EXPECT_EQ(spec.edge_probabilities, (std::vector<double>{0.25, 0.5}));
  EXPECT_TRUE(spec.timing);
}

TEST(CorpusSpec, RejectsUnknownKeysAndBadValues) {
  std::istringstream unknown("budget = 3\n");
  EXPECT_THROW(CorpusSpec::parse(unknown), error);
  std::istringstream negative("seed = -1\n");
  EXPECT_THROW(CorpusSpec::parse(negative), error);
  std::istringstream no_eq("seed 3\n");
  EXPECT_THROW(CorpusSpec::parse(no_eq), error);
}

TEST(CorpusSpec, RefusesInfeasibleSpecs) {
  auto expect_refusal = [](CorpusSpec spec) {
    try {
      spec.validate();
      ADD_FAILURE() << "accepted";
    } catch (const error& e) {
      EXPECT_EQ(e.code(), errc::infeasible_spec);
    }
  };
  CorpusSpec a;
  a.exhaustive_max_n = 7;
  expect_refusal(a);
  CorpusSpec b;
  b.random_max_n = 10;
  expect_refusal(b);
  CorpusSpec c;
  c.factor_max_n = 7;
  expect_refusal(c);
  CorpusSpec d;
  d.walk_budget_extra = 1;
  expect_refusal(d);
  EXPECT_NO_THROW(CorpusSpec{}.validate());
}

TEST(Catalog, IdsAreUniqueAndGroupsResolve) {
  std::set<std::string_view> ids;
  for (const auto& c : check_catalog()) EXPECT_TRUE(ids.insert(c.id).second) << c.id;
  for (const auto& [name, members] : suite_groups())
    for (const auto& id : members) EXPECT_TRUE(is_known_check(id)) << name << ": " << id;
  EXPECT_TRUE(is_known_suite("all"));
  EXPECT_TRUE(is_known_suite("corona-theorems"));
  EXPECT_FALSE(is_known_suite("no-such-suite"));
  EXPECT_THROW(run_check("no-such-check", CorpusSpec{}), error);
}

TEST(Verify, SmallSuiteAllMatchAndDeterministic) {
  const auto spec = small_spec();
  const auto first = run_suite("all", spec);
  const auto second = run_suite("all", spec);
  EXPECT_EQ(to_json_lines(first, false), to_json_lines(second, false));
  const auto summary = summarize(first);
  EXPECT_EQ(summary.mismatch, 0u);
  EXPECT_EQ(summary.exit_status(), 0);
  EXPECT_EQ(summary.total, first.size());
  EXPECT_EQ(summary.match + summary.mismatch + summary.skipped, summary.total);
  for (const auto& c : check_catalog()) EXPECT_NE(summary.find(c.id), nullptr) << c.id;
}

TEST(Verify, GroupRunsOnlyItsChecks) {
  const auto verdicts = run_suite("corona-theorems", small_spec());
  ASSERT_FALSE(verdicts.empty());
  for (const auto& v : verdicts) EXPECT_NE(v.check_id.find("corona"), std::string::npos);
}

TEST(Summary, EmptyAndMismatch) {
  const auto empty = summarize({});
  EXPECT_EQ(empty.total, 0u);
  EXPECT_EQ(empty.exit_status(), 0);

  Verdict bad;
  bad.check_id = "x";
  bad.status = Status::mismatch;
  bad.predicted = "{0 1}";
  bad.observed = "{0}";
  const auto s = summarize({bad});
  EXPECT_EQ(s.mismatch, 1u);
  EXPECT_NE(s.exit_status(), 0);
  EXPECT_EQ(to_csv(s, false), "check,total,match,mismatch,skipped,notes\nx,1,0,1,0,\nTOTAL,1,0,1,0,\n");
}

TEST(Report, TimingOnlyWhenRequested) {
  Verdict v;
  v.check_id = "x";
  v.runtime_ms = 1.5;
  EXPECT_FALSE(to_json(v, false).contains("runtime_ms"));
  EXPECT_TRUE(to_json(v, true).contains("runtime_ms"));
}
