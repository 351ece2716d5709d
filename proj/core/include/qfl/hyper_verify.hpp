#pragma once

#include "qfl/families.hpp"
#include "qfl/hypergeometric.hpp"
#include "qfl/identity_report.hpp"
#include "qfl/tseries.hpp"

namespace qfl {

/// (n+1) 2F1(-n, n+2; 3/2 | (1-z)/2) = (2z)^n 2F1(-n/2, (1-n)/2; -n | 1/z^2)
/// as polynomials in z.
IdentityReport verify_transform_210(int n);

/// 2F1(-n, n; 1/2 | (1-z)/2) = 2^{n-1} z^n 2F1(-n/2, (1-n)/2; 1-n | 1/z^2), n >= 1.
IdentityReport verify_transform_221(int n);

enum class GaussVariant { A, B };

/// 2F1(2a, 2b; a+b+1/2 | 1/2) = G(1/2) G(a+b+1/2) / (G(a+1/2) G(b+1/2)) with
/// a = -l/2 and b = n+1-l/2 (A) or b = n-l/2 (B).
IdentityReport verify_gauss_second_summation(int l, int n, GaussVariant variant);

/// Eigen-relation of the second-order ODE for MonicFib, MonicLucas, ChebU, ChebT.
IdentityReport verify_ode_eigen(FamilyKind kind, int n);

/// Point at which generating functions are expanded.
struct GfSample {
  Rational x{1};
  Rational s{1};
  Rational q{1};
};

/// sum_{n<=N} member_n t^n against the closed-form generating function; for
/// the q-kinds the 1phi1 and 2phi1 forms are also compared with each other.
IdentityReport verify_generating_function(FamilyKind kind, int order, const GfSample& sample);

/// Both series of the q-generating function at a sample, for inspection.
struct QGfForms {
  TSeries lhs;
  TSeries phi11;
  TSeries phi21;
};
QGfForms q_generating_function_forms(FamilyKind kind, int order, const GfSample& sample);

/// Chebyshev generating functions under the imaginary-argument sign laws
/// against the Fibonacci (Fib) or Lucas (Lucas) generating function at
/// s = sigma^2.
IdentityReport verify_chebyshev_gf_consistency(FamilyKind kind, int order, const Rational& x0,
                                               const Rational& sigma);

/// q = 1 substitution of QFib / QLucas against the classical family.
IdentityReport q_limit_check(FamilyKind kind, int n);

/// Equation tag for a family's generating function ("2.3", "3.6", ...).
std::string generating_function_tag(FamilyKind kind);

}  // namespace qfl
