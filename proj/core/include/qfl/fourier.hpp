#pragma once

#include <complex>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "qfl/errors.hpp"
#include "qfl/families.hpp"
#include "qfl/quadrature.hpp"

namespace qfl {

/// kappa = sqrt(ln(1/q) / 2), so that q = exp(-2 kappa^2). DomainError
/// outside 0 < q < 1.
double kappa_from_q(double q);

/// One instance of the Fourier transform theorems. For QFib the polynomial is
/// F_{n+1}(a e^{i kappa x}, s | q) (degree n); for QLucas it is
/// L_n(a e^{i kappa x}, s | q).
struct FourierCase {
  FamilyKind kind = FamilyKind::QFib;
  int n = 0;
  double a = 1.0;
  double s = 1.0;
  double q = 0.5;
  double y = 0.0;
  double kappa = 0.0;

  /// Fills kappa from q; throws DomainError for q outside (0, 1).
  static FourierCase make(FamilyKind kind, int n, double a, double s, double q, double y);
};

/// sqrt(2 pi) exp(-(y + m kappa)^2 / 2): the transform of exp(i m kappa x - x^2/2).
double gaussian_ft_closed(int m, double kappa, double y);

/// The same integral for m = n - 2k in the q-factored form
/// sqrt(2 pi) q^{n^2/4} q^{k(k-n)} exp(-(n-2k) kappa y - y^2/2).
double gaussian_ft_factored(int n, int k, double kappa, double y);

/// Relative disagreement between the two forms above.
double gaussian_ft_consistency(int n, int k, double kappa, double y);

/// Gauss-Hermite approximation of int P(a e^{i kappa x}) e^{ixy - x^2/2} dx
/// after x = sqrt(2) u. Throws RuleTooSmall if the rule has fewer nodes than
/// min_nodes(c).
std::complex<double> fourier_lhs_quadrature(const FourierCase& c, const QuadratureRule& rule,
                                            const CoeffPerturbation* perturb = nullptr);

/// Quadrature value at `rule`, checked against a rule with twice the nodes.
/// Throws RuleTooSmall if the two differ by more than tol * max(1, |value|).
std::complex<double> fourier_lhs_converged(const FourierCase& c, const QuadratureRule& rule,
                                           const QuadratureRule& doubled, double tol,
                                           const CoeffPerturbation* perturb = nullptr);

/// Smallest node count accepted by fourier_lhs_quadrature.
int min_nodes(const FourierCase& c);

/// Right side: sqrt(2 pi) q^{n^2/4} P(a e^{-kappa y}, s' | 1/q) e^{-y^2/2} with
/// s' = q s for QFib and s' = s for QLucas.
double fourier_rhs_closed(const FourierCase& c);

/// Left side by term-wise transformation of the explicit sum.
double fourier_symbolic_oracle(const FourierCase& c, const CoeffPerturbation* perturb = nullptr);

struct FourierResult {
  FourierCase fourier_case;
  int nodes = 0;
  std::complex<double> lhs_quadrature;
  double lhs_oracle = 0.0;
  double rhs_closed = 0.0;
  double abs_err = 0.0;      ///< |Re(lhs_quadrature) - rhs_closed|
  double rel_err = 0.0;      ///< abs_err / |rhs_closed|, or abs_err when rhs is zero
  double oracle_err = 0.0;   ///< |lhs_oracle - rhs_closed| / max(1, |rhs_closed|)
  double imag_leak = 0.0;    ///< |Im(lhs_quadrature)|
  double tol = 0.0;
  bool passed = false;
};

/// {kind, n, a, s, q, y, nodes, lhs_re, lhs_im, oracle, rhs, abs_err, rel_err, ...}
nlohmann::json to_json(const FourierResult& r);

class TheoremViolation : public Error {
 public:
  explicit TheoremViolation(FourierResult result);
  const FourierResult& result() const { return result_; }

 private:
  FourierResult result_;
};

/// Oracle tolerance for lhs_oracle against rhs_closed, relative to max(1, |rhs|).
inline constexpr double kOracleTolerance = 1e-11;

/// Evaluates all three quantities without throwing; `passed` records whether
/// |lhs - rhs| <= tol max(1,|rhs|), oracle_err <= kOracleTolerance and
/// |Im lhs| <= tol.
FourierResult evaluate_fourier_case(const FourierCase& c, const QuadratureRule& rule, double tol,
                                    const CoeffPerturbation* perturb = nullptr);

/// evaluate_fourier_case, throwing TheoremViolation on failure.
FourierResult verify_fourier_theorem(const FourierCase& c, const QuadratureRule& rule, double tol,
                                     const CoeffPerturbation* perturb = nullptr);

}  // namespace qfl
