#include "qfl/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

namespace qfl {

namespace {

const double kSqrt2Pi = std::sqrt(2.0 * std::numbers::pi);

void require_q_kind(FamilyKind kind) {
  if (kind != FamilyKind::QFib && kind != FamilyKind::QLucas) {
    throw std::invalid_argument("Fourier case: kind must be QFib or QLucas");
  }
}

// Index used with the families module for the case's polynomial.
int family_index(const FourierCase& c) { return c.kind == FamilyKind::QFib ? c.n + 1 : c.n; }

MPoly coefficient_law(const FourierCase& c, int k, const CoeffPerturbation* perturb) {
  return c.kind == FamilyKind::QFib ? coeff_law_f(c.n, k, perturb) : coeff_law_l(c.n, k);
}

// Dense coefficients in x of P(x, s | q) at floating s and q.
std::vector<double> x_coefficients(const MPoly& p, double s, double q) {
  std::vector<double> out(static_cast<std::size_t>(std::max(p.degree_x(), 0)) + 1, 0.0);
  for (const auto& [m, coeff] : p.terms()) {
    out[static_cast<std::size_t>(m.ex)] += MPoly::monomial({0, m.es, m.eq}, coeff).eval_double(0.0, s, q);
  }
  return out;
}

}  // namespace

double kappa_from_q(double q) {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("kappa_from_q: q must lie in (0, 1)");
  return std::sqrt(std::log(1.0 / q) / 2.0);
}

FourierCase FourierCase::make(FamilyKind kind, int n, double a, double s, double q, double y) {
  require_q_kind(kind);
  if (n < 0) throw std::invalid_argument("FourierCase: n >= 0");
  return {kind, n, a, s, q, y, kappa_from_q(q)};
}

double gaussian_ft_closed(int m, double kappa, double y) {
  const double shift = y + m * kappa;
  return kSqrt2Pi * std::exp(-shift * shift / 2.0);
}

double gaussian_ft_factored(int n, int k, double kappa, double y) {
  const double q = std::exp(-2.0 * kappa * kappa);
  return kSqrt2Pi * std::pow(q, n * n / 4.0) * std::pow(q, static_cast<double>(k) * (k - n)) *
         std::exp(-(n - 2 * k) * kappa * y - y * y / 2.0);
}

double gaussian_ft_consistency(int n, int k, double kappa, double y) {
  const double plain = gaussian_ft_closed(n - 2 * k, kappa, y);
  const double factored = gaussian_ft_factored(n, k, kappa, y);
  return std::abs(plain - factored) / std::max(std::abs(plain), std::numeric_limits<double>::min());
}

int min_nodes(const FourierCase& c) { return 2 * (c.n + static_cast<int>(std::ceil(std::abs(c.y)))) + 2; }

std::complex<double> fourier_lhs_quadrature(const FourierCase& c, const QuadratureRule& rule,
                                            const CoeffPerturbation* perturb) {
  require_q_kind(c.kind);
  if (rule.count() < min_nodes(c)) {
    throw RuleTooSmall("quadrature rule has " + std::to_string(rule.count()) + " nodes, case needs at least " +
                       std::to_string(min_nodes(c)));
  }
  const MPoly p = q_family_explicit(c.kind, family_index(c), perturb);
  const std::vector<double> coeffs = x_coefficients(p, c.s, c.q);
  const double root2 = std::sqrt(2.0);
  const auto integrand = [&](double u) {
    const double x = root2 * u;
    const std::complex<double> z = c.a * std::polar(1.0, c.kappa * x);
    std::complex<double> value = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) value = value * z + coeffs[i];
    return value * std::polar(1.0, x * c.y);
  };
  return root2 * rule.integrate(integrand);
}

std::complex<double> fourier_lhs_converged(const FourierCase& c, const QuadratureRule& rule,
                                           const QuadratureRule& doubled, double tol,
                                           const CoeffPerturbation* perturb) {
  const std::complex<double> value = fourier_lhs_quadrature(c, rule, perturb);
  const std::complex<double> refined = fourier_lhs_quadrature(c, doubled, perturb);
  if (std::abs(value - refined) > tol * std::max(1.0, std::abs(value))) {
    throw RuleTooSmall("quadrature not converged: " + std::to_string(rule.count()) + " vs " +
                       std::to_string(doubled.count()) + " nodes differ by " + std::to_string(std::abs(value - refined)));
  }
  return value;
}

double fourier_rhs_closed(const FourierCase& c) {
  require_q_kind(c.kind);
  const bool fib = c.kind == FamilyKind::QFib;
  const MPoly inverted = q_family_inverted(fib ? FamilyKind::QFibInv : FamilyKind::QLucasInv, family_index(c));
  const double argument = c.a * std::exp(-c.kappa * c.y);
  const double s_arg = fib ? c.q * c.s : c.s;
  return kSqrt2Pi * std::pow(c.q, c.n * c.n / 4.0) * inverted.eval_double(argument, s_arg, c.q) *
         std::exp(-c.y * c.y / 2.0);
}

double fourier_symbolic_oracle(const FourierCase& c, const CoeffPerturbation* perturb) {
  require_q_kind(c.kind);
  double total = 0.0;
  for (int k = 0; 2 * k <= c.n; ++k) {
    const double coeff = coefficient_law(c, k, perturb).eval_double(0.0, 0.0, c.q);
    const int m = c.n - 2 * k;
    total += coeff * std::pow(c.s, k) * std::pow(c.a, m) * gaussian_ft_closed(m, c.kappa, c.y);
  }
  return total;
}

FourierResult evaluate_fourier_case(const FourierCase& c, const QuadratureRule& rule, double tol,
                                    const CoeffPerturbation* perturb) {
  FourierResult r;
  r.fourier_case = c;
  r.nodes = rule.count();
  r.tol = tol;
  r.lhs_quadrature = fourier_lhs_quadrature(c, rule, perturb);
  r.lhs_oracle = fourier_symbolic_oracle(c, perturb);
  r.rhs_closed = fourier_rhs_closed(c);
  const double scale = std::max(1.0, std::abs(r.rhs_closed));
  r.abs_err = std::abs(r.lhs_quadrature.real() - r.rhs_closed);
  r.rel_err = r.rhs_closed != 0.0 ? r.abs_err / std::abs(r.rhs_closed) : r.abs_err;
  r.oracle_err = std::abs(r.lhs_oracle - r.rhs_closed) / scale;
  r.imag_leak = std::abs(r.lhs_quadrature.imag());
  r.passed = std::abs(r.lhs_quadrature - std::complex<double>(r.rhs_closed, 0.0)) <= tol * scale &&
             r.oracle_err <= kOracleTolerance && r.imag_leak <= tol;
  return r;
}

FourierResult verify_fourier_theorem(const FourierCase& c, const QuadratureRule& rule, double tol,
                                     const CoeffPerturbation* perturb) {
  FourierResult r = evaluate_fourier_case(c, rule, tol, perturb);
  if (!r.passed) throw TheoremViolation(r);
  return r;
}

TheoremViolation::TheoremViolation(FourierResult result)
    : Error("Fourier theorem violated for " + std::string(family_name(result.fourier_case.kind)) +
            " n=" + std::to_string(result.fourier_case.n)),
      result_(std::move(result)) {}

nlohmann::json to_json(const FourierResult& r) {
  const auto& c = r.fourier_case;
  return {
      {"kind", std::string(family_name(c.kind))},
      {"n", c.n},
      {"a", c.a},
      {"s", c.s},
      {"q", c.q},
      {"y", c.y},
      {"nodes", r.nodes},
      {"lhs_re", r.lhs_quadrature.real()},
      {"lhs_im", r.lhs_quadrature.imag()},
      {"oracle", r.lhs_oracle},
      {"rhs", r.rhs_closed},
      {"abs_err", r.abs_err},
      {"rel_err", r.rel_err},
      {"status", r.passed ? "pass" : "fail"},
  };
}

}  // namespace qfl
