#pragma once

#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

namespace qfl {

/// Counterexample carried by a failing report.
struct Counterexample {
  std::string parameters;
  std::string lhs;
  std::string rhs;
};

/// Outcome of checking one identity over a stated range. `equation` is the
/// reference tag of the identity being checked.
struct IdentityReport {
  std::string identity_id;
  std::string equation;
  std::string range;
  std::optional<Counterexample> first_failure;

  bool passed() const { return !first_failure.has_value(); }
  std::string status() const { return passed() ? "pass" : "fail"; }

  static IdentityReport pass(std::string id, std::string equation, std::string range) {
    return {std::move(id), std::move(equation), std::move(range), std::nullopt};
  }
  static IdentityReport fail(std::string id, std::string equation, std::string range, Counterexample why) {
    return {std::move(id), std::move(equation), std::move(range), std::move(why)};
  }
};

/// Folds many single-case reports into one ranged report that keeps the
/// first counterexample.
class ReportAccumulator {
 public:
  ReportAccumulator(std::string identity_id, std::string equation, std::string range)
      : report_{std::move(identity_id), std::move(equation), std::move(range), std::nullopt} {}

  void add(const IdentityReport& r) {
    if (!report_.first_failure && r.first_failure) report_.first_failure = r.first_failure;
  }
  void add(bool ok, const std::string& parameters, const std::string& lhs = "", const std::string& rhs = "") {
    if (!ok && !report_.first_failure) report_.first_failure = Counterexample{parameters, lhs, rhs};
  }
  const IdentityReport& report() const { return report_; }

 private:
  IdentityReport report_;
};

/// {identity_id, equation, range, status, first_failure?}
nlohmann::json to_json(const IdentityReport& r);

}  // namespace qfl
