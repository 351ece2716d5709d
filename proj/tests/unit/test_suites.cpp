#include <gtest/gtest.h>

#include <string>

#include <nlohmann/json.hpp>

#include "qfl/suites.hpp"

using namespace qfl;

namespace {

std::string failures(const SuiteResult& r) {
  std::string out;
  for (const auto& id : r.identities) {
    if (!id.passed()) out += id.identity_id + " (" + id.equation + ") " + id.first_failure->parameters + "\n";
  }
  return out;
}

}  // namespace

TEST(Suites, Names) {
  EXPECT_EQ(suite_names().size(), 7u);
  EXPECT_TRUE(is_suite_name("all"));
  EXPECT_TRUE(is_suite_name("section5"));
  EXPECT_FALSE(is_suite_name("everything"));
  EXPECT_THROW(run_suite("everything", {}), std::invalid_argument);
}

TEST(Suites, EverySuitePassesWithDefaults) {
  for (auto name : suite_names()) {
    const SuiteResult r = run_suite(name, {});
    EXPECT_EQ(r.suite, name);
    EXPECT_FALSE(r.identities.empty()) << name;
    EXPECT_TRUE(r.passed()) << name << "\n" << failures(r);
  }
}

TEST(Suites, ExactSuitesPassAtLargerRange) {
  SuiteOptions opts;
  opts.n_max = 20;
  for (auto name : {"classical", "qcore", "families"}) {
    const SuiteResult r = run_suite(name, opts);
    EXPECT_TRUE(r.passed()) << name << "\n" << failures(r);
  }
}

TEST(Suites, FourierGridShape) {
  const auto grid = fourier_grid(8);
  EXPECT_EQ(grid.size(), 2u * 9 * 4 * 5 * 3 * 3);
  SuiteOptions opts;
  opts.nodes = 128;
  const SuiteResult r = run_fourier_suite(opts);
  EXPECT_EQ(r.fourier.size(), grid.size());
  EXPECT_TRUE(r.passed()) << failures(r);
}

TEST(Suites, ReportIsDeterministic) {
  const auto a = to_json(run_suite("all", {})).dump();
  const auto b = to_json(run_suite("all", {})).dump();
  EXPECT_EQ(a, b);
}

TEST(Suites, ProbeFindingsAreReported) {
  const SuiteResult r = run_section5_suite({});
  ASSERT_TRUE(r.findings.contains("r_recurrence_probe"));
  const auto& kinds = r.findings["r_recurrence_probe"]["kinds"];
  ASSERT_EQ(kinds.size(), 2u);
  EXPECT_EQ(kinds[0]["kind"], "rfib");
  EXPECT_EQ(kinds[0]["printed_law_holds"], true);
  EXPECT_EQ(kinds[1]["kind"], "rlucas");
  EXPECT_EQ(kinds[1]["printed_law_holds"], false);
  EXPECT_EQ(kinds[1]["shifted_law_holds_from"], 2);
}

TEST(Suites, MutationFlipsToFailureWithTag) {
  SuiteOptions opts;
  opts.perturbation = CoeffPerturbation{4, 1, Rational(1)};
  const SuiteResult r = run_suite("all", opts);
  EXPECT_FALSE(r.passed());
  bool tagged = false;
  for (const auto& id : r.identities) {
    if (!id.passed() && id.equation.find("4.4") != std::string::npos) tagged = true;
  }
  EXPECT_TRUE(tagged);
  const auto j = to_json(r);
  EXPECT_NE(j.dump().find("\"status\":\"fail\""), std::string::npos);
}

TEST(Suites, SeedChangesOnlyRandomSweeps) {
  SuiteOptions a, b;
  b.seed = 99;
  const SuiteResult ra = run_qcore_suite(a), rb = run_qcore_suite(b);
  ASSERT_EQ(ra.identities.size(), rb.identities.size());
  EXPECT_TRUE(rb.passed());
}
