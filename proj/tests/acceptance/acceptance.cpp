// Acceptance run: one PASS/FAIL line per criterion.
// usage: qfl_acceptance <path-to-qfl-binary> [scratch-dir]

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qfl/families.hpp"
#include "qfl/fourier.hpp"
#include "qfl/half_gamma.hpp"
#include "qfl/hyper_verify.hpp"
#include "qfl/qcalc.hpp"
#include "qfl/suites.hpp"

using namespace qfl;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

const std::vector<FamilyKind> kClassical{FamilyKind::Fib,        FamilyKind::Lucas, FamilyKind::MonicFib,
                                         FamilyKind::MonicLucas, FamilyKind::ChebU, FamilyKind::ChebT};

Outcome numbers() {
  Outcome o;
  const long fib[] = {1, 1, 2, 3, 5, 8, 13};
  const long lucas[] = {1, 3, 4, 7, 11, 18};
  for (int n = 1; n <= 7; ++n) {
    const Rational v = family_member(FamilyKind::Fib, n).eval(1, 1, 1);
    o.require(v == Rational(fib[n - 1]), "F_" + std::to_string(n) + " = " + v.str());
  }
  for (int n = 1; n <= 6; ++n) {
    const Rational v = family_member(FamilyKind::Lucas, n).eval(1, 1, 1);
    o.require(v == Rational(lucas[n - 1]), "L_" + std::to_string(n) + " = " + v.str());
  }
  return o;
}

Outcome dual_construction() {
  Outcome o;
  for (int n = 0; n <= 20; ++n) {
    for (FamilyKind k : kClassical) {
      o.require(classical_recurrence(k, n) == classical_explicit(k, n),
                std::string(family_name(k)) + " n=" + std::to_string(n));
    }
    for (FamilyKind k : {FamilyKind::QFib, FamilyKind::QLucas}) {
      o.require(q_family_recurrence(k, n) == q_family_explicit(k, n),
                std::string(family_name(k)) + " n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome limit_and_interrelation() {
  Outcome o;
  for (int n = 0; n <= 20; ++n) {
    o.require(q_limit_check(FamilyKind::QFib, n).passed(), "q-limit qfib n=" + std::to_string(n));
    o.require(q_limit_check(FamilyKind::QLucas, n).passed(), "q-limit qlucas n=" + std::to_string(n));
    if (n >= 1) o.require(check_interrelation(n), "interrelation n=" + std::to_string(n));
  }
  return o;
}

Outcome base_inversion() {
  Outcome o;
  for (int n = 0; n <= 20; ++n) {
    const std::string at = " n=" + std::to_string(n);
    for (int k = 0; k <= n; ++k) {
      o.require(invert_base(q_binomial(n, k)) == q_binomial(n, k).shift_q(k * (k - n)), "q-binomial" + at);
    }
    if (n >= 1) o.require(invert_base(q_number(n)) == q_number(n).shift_q(1 - n), "q-number" + at);
    for (int k = 0; 2 * k <= n; ++k) {
      const MPoly f = coeff_law_f(n, k);
      const MPoly l = coeff_law_l(n, k);
      o.require(invert_base(f) == f.shift_q(k * (k - n - 1)), "fibonacci coefficient" + at);
      o.require(invert_base(l) == l.shift_q(k * (k - n)), "lucas coefficient" + at);
    }
  }
  return o;
}

Outcome transforms() {
  Outcome o;
  for (int n = 0; n <= 16; ++n) {
    o.require(verify_transform_210(n).passed(), "chebyshev-u transform n=" + std::to_string(n));
    if (n >= 1) o.require(verify_transform_221(n).passed(), "chebyshev-t transform n=" + std::to_string(n));
  }
  for (int n = 0; n <= 12; ++n) {
    for (int l = 0; l <= n; ++l) {
      for (GaussVariant v : {GaussVariant::A, GaussVariant::B}) {
        o.require(verify_gauss_second_summation(l, n, v).passed(),
                  "gauss l=" + std::to_string(l) + " n=" + std::to_string(n));
      }
    }
  }
  for (long twice_z = 1; twice_z <= 40; ++twice_z) {
    const PiPower lhs = gamma_half(2 * twice_z).value() * PiPower{1, 1};
    const PiPower rhs = PiPower{Rational(2).pow(twice_z - 1), 0} * gamma_half(twice_z).value() *
                        gamma_half(twice_z + 1).value();
    o.require(lhs == rhs, "duplication z=" + Rational(twice_z, 2).str());
  }
  return o;
}

Outcome ode() {
  Outcome o;
  for (FamilyKind k : {FamilyKind::MonicFib, FamilyKind::MonicLucas, FamilyKind::ChebU, FamilyKind::ChebT}) {
    for (int n = 0; n <= 16; ++n) {
      o.require(verify_ode_eigen(k, n).passed(), std::string(family_name(k)) + " n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome generating_functions() {
  Outcome o;
  const auto samples = default_gf_samples();
  o.require(samples.size() >= 3, "fewer than three samples");
  for (FamilyKind k : {FamilyKind::Fib, FamilyKind::Lucas, FamilyKind::ChebU, FamilyKind::ChebT, FamilyKind::QFib,
                       FamilyKind::QLucas}) {
    for (const auto& s : samples) {
      o.require(verify_generating_function(k, 12, s).passed(),
                std::string(family_name(k)) + " at x=" + s.x.str() + " s=" + s.s.str() + " q=" + s.q.str());
    }
  }
  for (FamilyKind k : {FamilyKind::QFib, FamilyKind::QLucas}) {
    for (const auto& s : samples) {
      const QGfForms f = q_generating_function_forms(k, 12, s);
      o.require(f.phi11 == f.phi21, std::string(family_name(k)) + ": 1phi1 and 2phi1 forms differ");
    }
  }
  return o;
}

Outcome fourier(double& worst_oracle, double& worst_quad, double& worst_imag) {
  Outcome o;
  const QuadratureRule rule(128);
  worst_oracle = worst_quad = worst_imag = 0;
  for (const auto& c : fourier_grid(8)) {
    const double rhs = fourier_rhs_closed(c);
    const double scale = std::abs(rhs);
    const double oracle = std::abs(fourier_symbolic_oracle(c) - rhs) / scale;
    const auto lhs = fourier_lhs_quadrature(c, rule);
    const double quad = std::abs(lhs.real() - rhs) / scale;
    const double imag = std::abs(lhs.imag()) / scale;
    worst_oracle = std::max(worst_oracle, oracle);
    worst_quad = std::max(worst_quad, quad);
    worst_imag = std::max(worst_imag, imag);
    const std::string at = std::string(family_name(c.kind)) + " n=" + std::to_string(c.n) + " a=" + fmt(c.a) +
                           " s=" + fmt(c.s) + " q=" + fmt(c.q) + " y=" + fmt(c.y);
    o.require(oracle <= 1e-11, "oracle rel err " + fmt(oracle) + " at " + at);
    o.require(quad <= 1e-8, "quadrature rel err " + fmt(quad) + " at " + at);
    o.require(imag <= 1e-10, "imaginary leakage " + fmt(imag) + " at " + at);
  }
  return o;
}

Outcome section5() {
  Outcome o;
  const auto samples = default_q_samples();
  for (const auto& q0 : samples) {
    const Rational one(1);
    o.require(r_s_family(FamilyKind::RFib, 2, q0) ==
                  MPoly::x(2) + MPoly(one / ((one + q0) * (one + q0 * q0))),
              "r_2 at q=" + q0.str());
    for (int n = 0; n <= 12; ++n) {
      for (auto [r, s] : {std::pair{FamilyKind::RFib, FamilyKind::SU}, std::pair{FamilyKind::RLucas, FamilyKind::ST}}) {
        const MPoly plain = r_s_family(r, n, q0);
        MPoly flipped;
        for (const auto& [m, c] : plain.terms()) flipped.add_term(m, ((n - m.ex) / 2) % 2 ? -c : c);
        o.require(flipped == r_s_family(s, n, q0), "sign relation n=" + std::to_string(n) + " q=" + q0.str());
      }
    }
  }
  const RecurrenceReport probe = probe_r_recurrence(12, samples);
  o.require(probe.kinds.size() == 2, "probe did not report both kinds");
  for (const auto& k : probe.kinds) {
    o.require(k.samples.size() >= 3, "probe used fewer than three samples");
    o.require(static_cast<int>(k.rows.size()) >= 11, "probe rows do not reach n = 11");
    if (k.kind == FamilyKind::RFib) o.require(k.printed_holds_all, "rfib recurrence law fails");
  }
  for (int n = 0; n <= 10; ++n) {
    o.require(check_little_qjacobi_relations(n, samples), "little q-Jacobi relations n=" + std::to_string(n));
  }
  return o;
}

int run_binary(const std::string& command) {
  const int status = std::system(command.c_str());
  if (status == -1 || !WIFEXITED(status)) return -1;
  return WEXITSTATUS(status);
}

Outcome cli_end_to_end(const std::string& binary, const std::filesystem::path& scratch, double& seconds) {
  Outcome o;
  const auto good = scratch / "acceptance_all.json";
  const auto bad = scratch / "acceptance_mutation.json";
  const auto t0 = Clock::now();
  const int code = run_binary("\"" + binary + "\" verify --suite all --report \"" + good.string() + "\" > /dev/null");
  seconds = seconds_since(t0);
  o.require(code == 0, "verify --suite all exited " + std::to_string(code));
  o.require(seconds < 60, "verify --suite all took " + fmt(seconds) + " s");

  const int mutated = run_binary("\"" + binary + "\" verify --suite all --perturb-coeff 4,1 --report \"" +
                                 bad.string() + "\" > /dev/null");
  o.require(mutated == 1, "mutated run exited " + std::to_string(mutated));
  std::ifstream in(bad);
  if (!in) {
    o.require(false, "mutated run wrote no report");
    return o;
  }
  const auto doc = nlohmann::json::parse(in, nullptr, false);
  bool tagged = false;
  if (doc.is_object() && doc.contains("identities")) {
    for (const auto& id : doc["identities"]) {
      if (id.value("status", "") == "fail" && id.value("equation", "").find("4.4") != std::string::npos) tagged = true;
    }
  }
  o.require(tagged, "mutated report lacks a failing identity tagged 4.4");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: qfl_acceptance <qfl-binary> [scratch-dir]\n";
    return 2;
  }
  const std::string binary = argv[1];
  const std::filesystem::path scratch = argc > 2 ? argv[2] : std::filesystem::temp_directory_path();

  int failed = 0;
  auto report = [&](int id, const std::string& title, double limit, const std::function<Outcome()>& body,
                    const std::string& extra = "") {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = seconds_since(t0);
    if (limit > 0) o.require(secs < limit, "runtime " + fmt(secs) + " s over " + fmt(limit) + " s");
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << id << "  " << title << "  (" << fmt(secs) << " s)";
    if (!extra.empty()) std::cout << "  " << extra;
    if (!o.ok) std::cout << "  -- " << o.detail;
    std::cout << std::endl;
  };

  report(1, "Fibonacci/Lucas numbers at x=s=1", 1.0, numbers);
  report(2, "recurrence = explicit sum, 8 kinds, n<=20", 5.0, dual_construction);
  report(3, "q->1 limit and interrelation, n<=20", 0, limit_and_interrelation);
  report(4, "base-inversion laws, n<=20", 0, base_inversion);
  report(5, "transformations n<=16, Gauss 0<=l<=n<=12, duplication", 0, transforms);
  report(6, "ODE eigen-relations, n<=16", 0, ode);
  report(7, "generating functions to t^12, 1phi1 = 2phi1", 0, generating_functions);

  double worst_oracle = 0, worst_quad = 0, worst_imag = 0;
  const auto t8 = Clock::now();
  Outcome o8;
  try {
    o8 = fourier(worst_oracle, worst_quad, worst_imag);
  } catch (const std::exception& e) {
    o8.require(false, std::string("exception: ") + e.what());
  }
  const double s8 = seconds_since(t8);
  o8.require(s8 < 30, "grid took " + fmt(s8) + " s");
  if (!o8.ok) ++failed;
  std::cout << (o8.ok ? "PASS" : "FAIL") << "  criterion 8  Fourier theorems on the grid, 128 nodes  (" << fmt(s8)
            << " s)  max rel: oracle " << fmt(worst_oracle) << ", quadrature " << fmt(worst_quad) << ", imaginary "
            << fmt(worst_imag);
  if (!o8.ok) std::cout << "  -- " << o8.detail;
  std::cout << std::endl;

  report(9, "r/s families, sign relation, recurrence probe, little q-Jacobi", 0, section5);

  double cli_secs = 0;
  report(10, "CLI verify --suite all, mutation flips exit code", 0,
         [&] { return cli_end_to_end(binary, scratch, cli_secs); });

  std::cout << (failed == 0 ? "ALL 10 CRITERIA PASS" : std::to_string(failed) + " CRITERIA FAILED") << std::endl;
  return failed == 0 ? 0 : 1;
}
