#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qfl/families.hpp"
#include "qfl/fourier.hpp"
#include "qfl/hyper_verify.hpp"
#include "qfl/identity_report.hpp"

namespace qfl {

/// Knobs shared by every verification suite.
struct SuiteOptions {
  int n_max = 12;
  int nodes = 96;
  double tol = 1e-8;
  std::uint64_t seed = 20111001;
  std::optional<CoeffPerturbation> perturbation;
};

struct SuiteResult {
  std::string suite;
  std::vector<IdentityReport> identities;
  std::vector<FourierResult> fourier;
  nlohmann::json findings = nlohmann::json::object();

  bool passed() const;
  void merge(SuiteResult&& other);
};

/// Known suite names, in the order `all` runs them.
std::span<const std::string_view> suite_names();
bool is_suite_name(std::string_view name);

/// Runs one suite ("all" runs every suite). Output order is deterministic.
SuiteResult run_suite(std::string_view name, const SuiteOptions& options);

// Individual suites.
SuiteResult run_classical_suite(const SuiteOptions& options);
SuiteResult run_qcore_suite(const SuiteOptions& options);
SuiteResult run_families_suite(const SuiteOptions& options);
SuiteResult run_hyper_suite(const SuiteOptions& options);
SuiteResult run_gf_suite(const SuiteOptions& options);
SuiteResult run_fourier_suite(const SuiteOptions& options);
SuiteResult run_section5_suite(const SuiteOptions& options);

/// Sample points used by the generating-function suite.
std::vector<GfSample> default_gf_samples();

/// Rational bases used by the fixed-base family checks.
std::vector<Rational> default_q_samples();

/// Fourier grid: n <= n_max, q in {0.3, 0.5, 0.64, 0.9}, y in {-2, -0.5, 0, 0.3, 1.5},
/// a, s in {-2, 1, 2}, both kinds.
std::vector<FourierCase> fourier_grid(int n_max);

/// JSON for a probe report.
nlohmann::json to_json(const RecurrenceReport& report);

/// {suite, identities, fourier, findings}
nlohmann::json to_json(const SuiteResult& result);

}  // namespace qfl
