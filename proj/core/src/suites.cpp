#include "qfl/suites.hpp"

#include <array>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "qfl/half_gamma.hpp"
#include "qfl/hyper_verify.hpp"
#include "qfl/qcalc.hpp"

namespace qfl {

namespace {

constexpr std::array<std::string_view, 7> kSuites{"classical", "qcore", "families", "hyper", "gf", "fourier", "section5"};

std::string upto(int n_max) { return "n<=" + std::to_string(n_max); }

std::string nk(int n, int k) { return "n=" + std::to_string(n) + ",k=" + std::to_string(k); }

MPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(0, 4);
  std::uniform_int_distribution<int> exp_x(0, 4);
  std::uniform_int_distribution<int> exp_s(0, 2);
  std::uniform_int_distribution<int> exp_q(-3, 3);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  MPoly p;
  const int count = terms(rng);
  for (int i = 0; i < count; ++i) {
    p.add_term({exp_x(rng), exp_s(rng), exp_q(rng)}, Rational(num(rng), den(rng)));
  }
  return p;
}

const CoeffPerturbation* perturb_of(const SuiteOptions& o) {
  return o.perturbation ? &*o.perturbation : nullptr;
}

// Degree structure: x-degree d and s-degree floor(d/2), every term of
// weight ex + 2 es = d.
bool degree_structure(const MPoly& p, int d) {
  if (p.degree_x() != d || p.degree_s() != d / 2) return false;
  for (const auto& [m, c] : p.terms()) {
    if (m.ex + 2 * m.es != d) return false;
  }
  return true;
}

}  // namespace

bool SuiteResult::passed() const {
  for (const auto& r : identities) {
    if (!r.passed()) return false;
  }
  for (const auto& f : fourier) {
    if (!f.passed) return false;
  }
  return true;
}

void SuiteResult::merge(SuiteResult&& other) {
  for (auto& r : other.identities) identities.push_back(std::move(r));
  for (auto& f : other.fourier) fourier.push_back(std::move(f));
  for (auto& [key, value] : other.findings.items()) findings[key] = std::move(value);
}

std::span<const std::string_view> suite_names() { return kSuites; }

bool is_suite_name(std::string_view name) {
  if (name == "all") return true;
  for (auto s : kSuites) {
    if (s == name) return true;
  }
  return false;
}

std::vector<GfSample> default_gf_samples() {
  return {
      {Rational(1), Rational(1), Rational(1, 2)},
      {Rational(2, 3), Rational(-3, 5), Rational(3, 7)},
      {Rational(-5, 4), Rational(2), Rational(5, 3)},
      {Rational(0), Rational(7, 2), Rational(-2, 3)},
  };
}

std::vector<Rational> default_q_samples() {
  return {Rational(1, 2), Rational(1, 3), Rational(2, 5), Rational(3, 2), Rational(-2, 7)};
}

std::vector<FourierCase> fourier_grid(int n_max) {
  std::vector<FourierCase> cases;
  for (FamilyKind kind : {FamilyKind::QFib, FamilyKind::QLucas}) {
    for (int n = 0; n <= n_max; ++n) {
      for (double q : {0.3, 0.5, 0.64, 0.9}) {
        for (double y : {-2.0, -0.5, 0.0, 0.3, 1.5}) {
          for (double a : {-2.0, 1.0, 2.0}) {
            for (double s : {-2.0, 1.0, 2.0}) cases.push_back(FourierCase::make(kind, n, a, s, q, y));
          }
        }
      }
    }
  }
  return cases;
}

SuiteResult run_classical_suite(const SuiteOptions& o) {
  SuiteResult out;
  out.suite = "classical";
  const int n_max = o.n_max;

  {
    ReportAccumulator acc("fibonacci-lucas-numbers", "2.1,2.14", "F_1..F_7, L_1..L_6 at x=s=1");
    const std::array<long, 7> fib{1, 1, 2, 3, 5, 8, 13};
    const std::array<long, 6> lucas{1, 3, 4, 7, 11, 18};
    for (int n = 1; n <= 7; ++n) {
      const Rational v = classical_recurrence(FamilyKind::Fib, n).eval(1, 1, 1);
      acc.add(v == Rational(fib[n - 1]), "F_" + std::to_string(n), v.str(), std::to_string(fib[n - 1]));
    }
    for (int n = 1; n <= 6; ++n) {
      const Rational v = classical_recurrence(FamilyKind::Lucas, n).eval(1, 1, 1);
      acc.add(v == Rational(lucas[n - 1]), "L_" + std::to_string(n), v.str(), std::to_string(lucas[n - 1]));
    }
    out.identities.push_back(acc.report());
  }

  const std::array<std::pair<FamilyKind, const char*>, 6> dual{{
      {FamilyKind::Fib, "2.1,2.2"},
      {FamilyKind::Lucas, "2.14"},
      {FamilyKind::MonicFib, "2.4,2.8"},
      {FamilyKind::MonicLucas, "2.16,2.20"},
      {FamilyKind::ChebU, "2.5,2.7"},
      {FamilyKind::ChebT, "2.17"},
  }};
  for (const auto& [kind, tag] : dual) {
    ReportAccumulator acc("dual-construction-" + std::string(family_name(kind)), tag, upto(n_max));
    for (int n = 0; n <= n_max; ++n) {
      const MPoly rec = classical_recurrence(kind, n);
      const MPoly exp = classical_explicit(kind, n);
      acc.add(rec == exp, "n=" + std::to_string(n), rec.str(), exp.str());
    }
    out.identities.push_back(acc.report());
  }

  for (const auto& [kind, tag] : {std::pair{FamilyKind::Fib, "2.6"}, std::pair{FamilyKind::Lucas, "2.18"}}) {
    ReportAccumulator acc("chebyshev-connection-" + std::string(family_name(kind)), tag, upto(n_max));
    for (int n = 0; n <= n_max; ++n) acc.add(check_chebyshev_connection(kind, n), "n=" + std::to_string(n));
    out.identities.push_back(acc.report());
  }

  {
    ReportAccumulator acc("degree-structure-classical", "2.2,2.14", upto(n_max));
    for (int n = 0; n <= n_max; ++n) {
      acc.add(degree_structure(classical_explicit(FamilyKind::Fib, n + 1), n), "F_" + std::to_string(n + 1));
      acc.add(degree_structure(classical_explicit(FamilyKind::Lucas, n), n), "L_" + std::to_string(n));
    }
    out.identities.push_back(acc.report());
  }

  {
    // A_n C_{n+1} < 0 for the monic recurrences: no positive measure.
    ReportAccumulator acc("favard-sign", "2.8,2.20", "A_n=1, C_n=-1/4 (fib), -1 (lucas)");
    const Rational a(1);
    acc.add((a * Rational(-1, 4)).sign() < 0, "monic fibonacci");
    acc.add((a * Rational(-1)).sign() < 0, "monic lucas");
    out.identities.push_back(acc.report());
  }
  return out;
}

SuiteResult run_qcore_suite(const SuiteOptions& o) {
  SuiteResult out;
  out.suite = "qcore";
  const int n_max = o.n_max;
  const MPoly q = MPoly::q();

  {
    ReportAccumulator acc("q-binomial-inversion", "4.3", upto(n_max) + ", 0<=k<=n");
    for (int n = 0; n <= n_max; ++n) {
      for (int k = 0; k <= n; ++k) {
        const MPoly b = q_binomial(n, k);
        const MPoly lhs = invert_base(b);
        const MPoly rhs = b.shift_q(k * (k - n));
        acc.add(lhs == rhs, nk(n, k), lhs.str(), rhs.str());
      }
    }
    out.identities.push_back(acc.report());
  }
  {
    ReportAccumulator acc("q-number-inversion", "4.10", "1<=" + upto(n_max));
    for (int n = 1; n <= n_max; ++n) {
      const MPoly lhs = invert_base(q_number(n));
      const MPoly rhs = q_number(n).shift_q(1 - n);
      acc.add(lhs == rhs, "n=" + std::to_string(n), lhs.str(), rhs.str());
    }
    out.identities.push_back(acc.report());
  }
  {
    ReportAccumulator acc("q-binomial-ratio", "3.13", upto(n_max) + ", 1<=k<=n/2");
    for (int n = 2; n <= n_max; ++n) {
      for (int k = 1; 2 * k <= n; ++k) {
        // (1 - q^k) [n-k, k] = (1 - q^{n-k}) [n-k-1, k-1]
        const MPoly lhs = (MPoly(1) - q.pow(k)) * q_binomial(n - k, k);
        const MPoly rhs = (MPoly(1) - q.pow(n - k)) * q_binomial(n - k - 1, k - 1);
        acc.add(lhs == rhs, nk(n, k), lhs.str(), rhs.str());
      }
    }
    out.identities.push_back(acc.report());
  }
  {
    ReportAccumulator acc("q-binomial-classical-limit", "3.5", upto(n_max));
    for (int n = 0; n <= n_max; ++n) {
      for (int k = 0; k <= n; ++k) {
        const Rational v = q_binomial(n, k).eval(0, 0, 1);
        acc.add(v == binomial(n, k), nk(n, k), v.str(), binomial(n, k).str());
      }
    }
    out.identities.push_back(acc.report());
  }
  {
    ReportAccumulator acc("coefficient-inversion-fibonacci", "4.4", upto(n_max) + ", k<=n/2");
    ReportAccumulator acc_l("coefficient-inversion-lucas", "4.11", upto(n_max) + ", k<=n/2");
    ReportAccumulator acc_t("theorem-coefficient-identity", "4.4,4.7", upto(n_max) + ", k<=n/2");
    for (int n = 0; n <= n_max; ++n) {
      for (int k = 0; 2 * k <= n; ++k) {
        const MPoly cf = coeff_law_f(n, k, perturb_of(o));
        const MPoly cf_inv = invert_base(cf);
        acc.add(cf_inv == cf.shift_q(k * (k - n - 1)), nk(n, k), cf_inv.str(), cf.shift_q(k * (k - n - 1)).str());
        acc_t.add(cf_inv.shift_q(k) == cf.shift_q(k * (k - n)), nk(n, k), cf_inv.shift_q(k).str(),
                  cf.shift_q(k * (k - n)).str());
        const MPoly cl = coeff_law_l(n, k);
        acc_l.add(invert_base(cl) == cl.shift_q(k * (k - n)), nk(n, k), invert_base(cl).str(),
                  cl.shift_q(k * (k - n)).str());
      }
    }
    out.identities.push_back(acc.report());
    out.identities.push_back(acc_l.report());
    out.identities.push_back(acc_t.report());
  }
  {
    std::mt19937_64 rng(o.seed);
    ReportAccumulator acc("hahn-operator-linearity", "3.2", "64 random polynomials, seed " + std::to_string(o.seed));
    ReportAccumulator ring("mpoly-ring-axioms", "-", "64 random triples, seed " + std::to_string(o.seed));
    for (int i = 0; i < 64; ++i) {
      const MPoly p = random_poly(rng);
      const MPoly r = random_poly(rng);
      const MPoly t = random_poly(rng);
      const Rational alpha(static_cast<long>(rng() % 11) - 5, 3);
      const Rational beta(static_cast<long>(rng() % 7) - 3, 2);
      acc.add(hahn_dq(alpha * p + beta * r) == alpha * hahn_dq(p) + beta * hahn_dq(r), "sample " + std::to_string(i));
      ring.add((p * r) * t == p * (r * t) && p * (r + t) == p * r + p * t && p * r == r * p,
               "sample " + std::to_string(i));
    }
    ReportAccumulator mono("hahn-operator-monomials", "3.2", upto(n_max));
    for (int n = 0; n <= n_max; ++n) {
      const MPoly lhs = hahn_dq(MPoly::x(n));
      const MPoly rhs = n == 0 ? MPoly() : q_number(n) * MPoly::x(n - 1);
      mono.add(lhs == rhs, "n=" + std::to_string(n), lhs.str(), rhs.str());
    }
    out.identities.push_back(mono.report());
    out.identities.push_back(acc.report());
    out.identities.push_back(ring.report());
  }
  return out;
}

SuiteResult run_families_suite(const SuiteOptions& o) {
  SuiteResult out;
  out.suite = "families";
  const int n_max = o.n_max;
  const auto* perturb = perturb_of(o);

  const std::array<std::pair<FamilyKind, const char*>, 2> dual{{
      {FamilyKind::QFib, "3.1,3.3"},
      {FamilyKind::QLucas, "3.9,3.10"},
  }};
  for (const auto& [kind, tag] : dual) {
    ReportAccumulator acc("dual-construction-" + std::string(family_name(kind)), tag, upto(n_max));
    for (int n = 0; n <= n_max; ++n) {
      const MPoly rec = q_family_recurrence(kind, n);
      const MPoly exp = q_family_explicit(kind, n, perturb);
      acc.add(rec == exp, "n=" + std::to_string(n), rec.str(), exp.str());
    }
    out.identities.push_back(acc.report());
  }

  {
    ReportAccumulator fib("q-limit-fibonacci", "3.7", upto(n_max));
    ReportAccumulator luc("q-limit-lucas", "3.7", upto(n_max));
    for (int n = 0; n <= n_max; ++n) {
      const MPoly lim = q_family_explicit(FamilyKind::QFib, n, perturb).substitute_q(Rational(1));
      const MPoly classical = classical_explicit(FamilyKind::Fib, n);
      fib.add(lim == classical, "n=" + std::to_string(n), lim.str(), classical.str());
      luc.add(q_limit_check(FamilyKind::QLucas, n));
    }
    out.identities.push_back(fib.report());
    out.identities.push_back(luc.report());
  }
  {
    ReportAccumulator acc("interrelation", "3.13", "1<=" + upto(n_max));
    for (int n = 1; n <= n_max; ++n) {
      const MPoly lhs = q_family_explicit(FamilyKind::QLucas, n);
      const MPoly rhs = q_family_explicit(FamilyKind::QFib, n + 1, perturb) +
                        MPoly::s() * q_family_explicit(FamilyKind::QFib, n - 1, perturb);
      acc.add(lhs == rhs, "n=" + std::to_string(n), lhs.str(), rhs.str());
    }
    out.identities.push_back(acc.report());
  }
  {
    ReportAccumulator fib("base-inversion-fibonacci", "4.4,4.5", upto(n_max));
    ReportAccumulator luc("base-inversion-lucas", "4.11,4.12", upto(n_max));
    for (int n = 0; n <= n_max; ++n) {
      const MPoly f = invert_base(q_family_explicit(FamilyKind::QFib, n, perturb));
      const MPoly fi = q_family_inverted(FamilyKind::QFibInv, n);
      fib.add(f == fi, "n=" + std::to_string(n), f.str(), fi.str());
      const MPoly l = invert_base(q_family_explicit(FamilyKind::QLucas, n));
      const MPoly li = q_family_inverted(FamilyKind::QLucasInv, n);
      luc.add(l == li, "n=" + std::to_string(n), l.str(), li.str());
    }
    out.identities.push_back(fib.report());
    out.identities.push_back(luc.report());
  }
  {
    ReportAccumulator acc("degree-structure-q", "3.3,3.10", upto(n_max));
    for (int n = 0; n <= n_max; ++n) {
      acc.add(degree_structure(q_family_explicit(FamilyKind::QFib, n + 1, perturb), n), "F_" + std::to_string(n + 1));
      acc.add(degree_structure(q_family_explicit(FamilyKind::QLucas, n), n), "L_" + std::to_string(n));
    }
    out.identities.push_back(acc.report());
  }
  return out;
}

SuiteResult run_hyper_suite(const SuiteOptions& o) {
  SuiteResult out;
  out.suite = "hyper";
  const int n_max = o.n_max;
  {
    ReportAccumulator a("transform-chebyshev-u", "2.10", upto(n_max));
    ReportAccumulator b("transform-chebyshev-t", "2.21", "1<=" + upto(n_max));
    for (int n = 0; n <= n_max; ++n) {
      a.add(verify_transform_210(n));
      if (n >= 1) b.add(verify_transform_221(n));
    }
    out.identities.push_back(a.report());
    out.identities.push_back(b.report());
  }
  for (GaussVariant v : {GaussVariant::A, GaussVariant::B}) {
    const bool is_a = v == GaussVariant::A;
    ReportAccumulator acc(is_a ? "gauss-second-summation-a" : "gauss-second-summation-b", is_a ? "A.3,A.4" : "B.3,B.4",
                          "0<=l<=n<=" + std::to_string(n_max));
    for (int n = 0; n <= n_max; ++n) {
      for (int l = 0; l <= n; ++l) acc.add(verify_gauss_second_summation(l, n, v));
    }
    out.identities.push_back(acc.report());
  }
  {
    ReportAccumulator dup("gamma-duplication", "A.6", "z in {1/2, 1, ..., 20}");
    for (long twice_z = 1; twice_z <= 40; ++twice_z) {
      // Gamma(2z) sqrt(pi) = 2^{2z-1} Gamma(z) Gamma(z+1/2)
      const PiPower lhs = gamma_half(2 * twice_z).value() * PiPower{Rational(1), 1};
      const PiPower rhs = PiPower{Rational(2).pow(twice_z - 1), 0} * gamma_half(twice_z).value() *
                          gamma_half(twice_z + 1).value();
      dup.add(lhs == rhs, "z=" + Rational(twice_z, 2).str());
    }
    ReportAccumulator refl("gamma-reflection", "A.5", "0<=m<=20");
    for (long m = 0; m <= 20; ++m) {
      const PiPower prod = gamma_half(2 * m + 1).value() * gamma_half(1 - 2 * m).value();
      refl.add(prod == PiPower{Rational(m % 2 ? -1 : 1), 2}, "m=" + std::to_string(m));
    }
    out.identities.push_back(dup.report());
    out.identities.push_back(refl.report());
  }
  for (FamilyKind kind : {FamilyKind::MonicFib, FamilyKind::MonicLucas, FamilyKind::ChebU, FamilyKind::ChebT}) {
    const IdentityReport first = verify_ode_eigen(kind, 0);
    ReportAccumulator acc(first.identity_id, first.equation, upto(n_max));
    for (int n = 0; n <= n_max; ++n) acc.add(verify_ode_eigen(kind, n));
    out.identities.push_back(acc.report());
  }
  return out;
}

SuiteResult run_gf_suite(const SuiteOptions& o) {
  SuiteResult out;
  out.suite = "gf";
  const int order = std::max(o.n_max, 2);
  const auto samples = default_gf_samples();
  for (FamilyKind kind : {FamilyKind::Fib, FamilyKind::Lucas, FamilyKind::ChebU, FamilyKind::ChebT, FamilyKind::QFib,
                          FamilyKind::QLucas}) {
    const std::string tag = generating_function_tag(kind);
    ReportAccumulator acc("generating-function-" + std::string(family_name(kind)),
                          kind == FamilyKind::QFib || kind == FamilyKind::QLucas ? tag + ",3.8" : tag,
                          "order " + std::to_string(order) + ", " + std::to_string(samples.size()) + " samples");
    for (const auto& sample : samples) acc.add(verify_generating_function(kind, order, sample));
    out.identities.push_back(acc.report());
  }
  {
    ReportAccumulator fib("chebyshev-gf-fibonacci", "2.6,2.13,2.3", "order " + std::to_string(order));
    ReportAccumulator luc("chebyshev-gf-lucas", "2.18,2.25,2.15", "order " + std::to_string(order));
    const std::array<std::pair<Rational, Rational>, 3> points{{
        {Rational(1), Rational(1)},
        {Rational(3, 2), Rational(2, 3)},
        {Rational(-2, 5), Rational(-3)},
    }};
    for (const auto& [x0, sigma] : points) {
      fib.add(verify_chebyshev_gf_consistency(FamilyKind::Fib, order, x0, sigma));
      luc.add(verify_chebyshev_gf_consistency(FamilyKind::Lucas, order, x0, sigma));
    }
    out.identities.push_back(fib.report());
    out.identities.push_back(luc.report());
  }
  return out;
}

SuiteResult run_fourier_suite(const SuiteOptions& o) {
  SuiteResult out;
  out.suite = "fourier";
  const int n_max = std::min(o.n_max, 8);
  const QuadratureRule rule(o.nodes);
  const auto* perturb = perturb_of(o);
  ReportAccumulator consistency("gaussian-transform-forms", "4.6", "grid, relative 1e-12");
  for (const auto& c : fourier_grid(n_max)) {
    out.fourier.push_back(evaluate_fourier_case(c, rule, o.tol, perturb));
    for (int k = 0; 2 * k <= c.n; ++k) {
      consistency.add(gaussian_ft_consistency(c.n, k, c.kappa, c.y) <= 1e-12,
                      "n=" + std::to_string(c.n) + ",k=" + std::to_string(k) + ",q=" + std::to_string(c.q) +
                          ",y=" + std::to_string(c.y));
    }
  }
  out.identities.push_back(consistency.report());
  for (FamilyKind kind : {FamilyKind::QFib, FamilyKind::QLucas}) {
    const bool fib = kind == FamilyKind::QFib;
    ReportAccumulator acc(fib ? "fourier-theorem-fibonacci" : "fourier-theorem-lucas", fib ? "4.7" : "4.13",
                          "n<=" + std::to_string(n_max) + ", " + std::to_string(o.nodes) + " nodes, tol " +
                              nlohmann::json(o.tol).dump());
    for (const auto& r : out.fourier) {
      if (r.fourier_case.kind != kind) continue;
      acc.add(r.passed, to_json(r).dump(), nlohmann::json(r.lhs_quadrature.real()).dump(),
              nlohmann::json(r.rhs_closed).dump());
    }
    out.identities.push_back(acc.report());
  }
  return out;
}

SuiteResult run_section5_suite(const SuiteOptions& o) {
  SuiteResult out;
  out.suite = "section5";
  const auto samples = default_q_samples();
  const int n_max = o.n_max;
  {
    ReportAccumulator acc("r-family-second-member", "5.1", "q in default samples");
    for (const auto& q0 : samples) {
      const MPoly r2 = r_s_family(FamilyKind::RFib, 2, q0);
      const MPoly expected = MPoly::x(2) + MPoly((Rational(1) + q0).inverse() * (Rational(1) + q0 * q0).inverse());
      acc.add(r2 == expected, "q=" + q0.str(), r2.str(), expected.str());
    }
    out.identities.push_back(acc.report());
  }
  {
    ReportAccumulator acc("s-family-sign-law", "5.4", upto(n_max));
    for (const auto& q0 : samples) {
      for (int n = 0; n <= n_max; ++n) {
        for (const auto& [r_kind, s_kind] : {std::pair{FamilyKind::RFib, FamilyKind::SU},
                                             std::pair{FamilyKind::RLucas, FamilyKind::ST}}) {
          const MPoly r = r_s_family(r_kind, n, q0);
          MPoly flipped;
          for (const auto& [m, c] : r.terms()) flipped.add_term(m, ((n - m.ex) / 2) % 2 ? -c : c);
          const MPoly s = r_s_family(s_kind, n, q0);
          acc.add(flipped == s, std::string(family_name(s_kind)) + ",n=" + std::to_string(n) + ",q=" + q0.str(),
                  flipped.str(), s.str());
        }
      }
    }
    out.identities.push_back(acc.report());
  }
  {
    const RecurrenceReport probe = probe_r_recurrence(std::max(n_max, 2), samples);
    out.findings["r_recurrence_probe"] = to_json(probe);
    for (const auto& kr : probe.kinds) {
      if (kr.kind == FamilyKind::RFib) {
        ReportAccumulator acc("r-recurrence-fibonacci", "5.3", "1<=n<" + std::to_string(probe.n_max));
        acc.add(kr.printed_holds_all, "first failure n=" + std::to_string(kr.printed_first_failure.value_or(-1)));
        out.identities.push_back(acc.report());
      } else {
        // The Lucas-type family follows the index-shifted coefficient from n = 2.
        ReportAccumulator acc("r-recurrence-lucas-shifted", "5.3", "2<=n<" + std::to_string(probe.n_max));
        acc.add(kr.shifted_holds_from.has_value() && *kr.shifted_holds_from <= 2,
                "shifted law holds from n=" + std::to_string(kr.shifted_holds_from.value_or(-1)));
        out.identities.push_back(acc.report());
      }
    }
  }
  {
    const int lqj_max = std::min(n_max, 10);
    ReportAccumulator acc("little-q-jacobi-relations", "5.8,5.9", "n<=" + std::to_string(lqj_max) + ", " +
                                                                      std::to_string(samples.size()) + " samples");
    for (int n = 0; n <= lqj_max; ++n) {
      for (const auto& q0 : samples) {
        const auto status = little_qjacobi_relation_status(n, q0);
        static constexpr std::array<const char*, 4> names{"even-U", "odd-U", "even-T", "odd-T"};
        for (std::size_t i = 0; i < status.size(); ++i) {
          acc.add(status[i], std::string(names[i]) + ",n=" + std::to_string(n) + ",q=" + q0.str());
        }
      }
    }
    out.identities.push_back(acc.report());
  }
  return out;
}

SuiteResult run_suite(std::string_view name, const SuiteOptions& options) {
  if (name == "all") {
    SuiteResult all;
    all.suite = "all";
    for (auto s : kSuites) all.merge(run_suite(s, options));
    return all;
  }
  if (name == "classical") return run_classical_suite(options);
  if (name == "qcore") return run_qcore_suite(options);
  if (name == "families") return run_families_suite(options);
  if (name == "hyper") return run_hyper_suite(options);
  if (name == "gf") return run_gf_suite(options);
  if (name == "fourier") return run_fourier_suite(options);
  if (name == "section5") return run_section5_suite(options);
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

nlohmann::json to_json(const RecurrenceReport& report) {
  nlohmann::json kinds = nlohmann::json::array();
  for (const auto& kr : report.kinds) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : kr.rows) {
      rows.push_back({{"n", row.n}, {"printed_law", row.printed_holds}, {"shifted_law", row.shifted_holds}});
    }
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& q0 : kr.samples) samples.push_back(q0.str());
    auto opt = [](const std::optional<int>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
    kinds.push_back({
        {"kind", std::string(family_name(kr.kind))},
        {"samples", samples},
        {"printed_law_holds", kr.printed_holds_all},
        {"printed_law_first_failure", opt(kr.printed_first_failure)},
        {"shifted_law_holds", kr.shifted_holds_all},
        {"shifted_law_first_failure", opt(kr.shifted_first_failure)},
        {"shifted_law_holds_from", opt(kr.shifted_holds_from)},
        {"rows", rows},
    });
  }
  return {{"n_max", report.n_max}, {"kinds", kinds}};
}

nlohmann::json to_json(const SuiteResult& result) {
  nlohmann::json ids = nlohmann::json::array();
  for (const auto& r : result.identities) ids.push_back(to_json(r));
  nlohmann::json four = nlohmann::json::array();
  for (const auto& f : result.fourier) four.push_back(to_json(f));
  return {{"suite", result.suite}, {"identities", ids}, {"fourier", four}, {"findings", result.findings}};
}

}  // namespace qfl
