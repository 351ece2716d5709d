#include "qfl/hyper_verify.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include "qfl/half_gamma.hpp"
#include "qfl/qcalc.hpp"

namespace qfl {

namespace {

std::string n_param(int n) { return "n=" + std::to_string(n); }

IdentityReport compare(const std::string& id, const std::string& eq, const std::string& range,
                       const std::string& params, const MPoly& lhs, const MPoly& rhs) {
  if (lhs == rhs) return IdentityReport::pass(id, eq, range);
  return IdentityReport::fail(id, eq, range, {params, lhs.str(), rhs.str()});
}

std::string series_str(const TSeries& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

IdentityReport compare(const std::string& id, const std::string& eq, const std::string& range,
                       const std::string& params, const TSeries& lhs, const TSeries& rhs) {
  if (lhs == rhs) return IdentityReport::pass(id, eq, range);
  return IdentityReport::fail(id, eq, range, {params, series_str(lhs), series_str(rhs)});
}

// sum_k coeffs[k] * base^k for a polynomial `base`.
MPoly sum_in_powers(const std::vector<Rational>& coeffs, const MPoly& base) {
  MPoly out;
  MPoly power(1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    out += coeffs[k] * power;
    if (k + 1 < coeffs.size()) power *= base;
  }
  return out;
}

// sum_m coeffs[m] * scale * z^{n-2m}: the "x^n F(1/x^2)" shape.
MPoly reversed_even_sum(const std::vector<Rational>& coeffs, int n, const Rational& scale) {
  MPoly out;
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    out += coeffs[m] * scale * MPoly::x(n - 2 * static_cast<int>(m));
  }
  return out;
}

std::string sample_str(const GfSample& s) {
  return "x=" + s.x.str() + ",s=" + s.s.str() + ",q=" + s.q.str();
}

// c0 + c1 t
TSeries linear(std::size_t order, const Rational& c0, const Rational& c1) {
  TSeries out(order);
  out[0] = c0;
  if (order >= 1) out[1] = c1;
  return out;
}

MPoly family_for_gf(FamilyKind kind, int n) {
  switch (kind) {
    case FamilyKind::Fib:
    case FamilyKind::Lucas:
    case FamilyKind::ChebU:
    case FamilyKind::ChebT:
      return classical_explicit(kind, n);
    case FamilyKind::QFib:
    case FamilyKind::QLucas:
      return q_family_explicit(kind, n);
    default:
      throw std::invalid_argument("verify_generating_function: unsupported family");
  }
}

}  // namespace

IdentityReport verify_transform_210(int n) {
  if (n < 0) throw std::invalid_argument("verify_transform_210: n >= 0");
  const std::string id = "transform-chebyshev-u";
  const MPoly half_one_minus_z = Rational(1, 2) * (MPoly(1) - MPoly::x());
  const MPoly lhs = Rational(n + 1) * sum_in_powers(hyper2f1_coefficients(Rational(-n), Rational(n + 2), Rational(3, 2)),
                                                   half_one_minus_z);
  const MPoly rhs = reversed_even_sum(hyper2f1_coefficients(Rational(-n, 2), Rational(1 - n, 2), Rational(-n)), n,
                                      Rational(2).pow(n));
  return compare(id, "2.10", n_param(n), n_param(n), lhs, rhs);
}

IdentityReport verify_transform_221(int n) {
  if (n < 1) throw std::invalid_argument("verify_transform_221: n >= 1");
  const std::string id = "transform-chebyshev-t";
  const MPoly half_one_minus_z = Rational(1, 2) * (MPoly(1) - MPoly::x());
  const MPoly lhs =
      sum_in_powers(hyper2f1_coefficients(Rational(-n), Rational(n), Rational(1, 2)), half_one_minus_z);
  const MPoly rhs = reversed_even_sum(hyper2f1_coefficients(Rational(-n, 2), Rational(1 - n, 2), Rational(1 - n)), n,
                                      Rational(2).pow(n - 1));
  return compare(id, "2.21", n_param(n), n_param(n), lhs, rhs);
}

IdentityReport verify_gauss_second_summation(int l, int n, GaussVariant variant) {
  if (l < 0 || l > n) throw std::invalid_argument("verify_gauss_second_summation: 0 <= l <= n");
  const bool a_variant = variant == GaussVariant::A;
  const std::string id = a_variant ? "gauss-second-summation-a" : "gauss-second-summation-b";
  const std::string eq = a_variant ? "A.3" : "B.3";
  const std::string params = "l=" + std::to_string(l) + ",n=" + std::to_string(n);
  // 2a = -l, 2b = 2n+2-l (A) or 2n-l (B); c = a+b+1/2
  const long twice_b = a_variant ? 2L * n + 2 - l : 2L * n - l;
  const long twice_c = -l + twice_b + 1;
  const Rational lhs = hyper2f1_terminating({Rational(-l), Rational(twice_b), Rational(twice_c, 2), Rational(1, 2)});
  const std::array<long, 2> numer{1, twice_c};
  const std::array<long, 2> denom{1 - l, twice_b + 1};
  const auto rhs = gamma_ratio(numer, denom);
  if (!rhs) return IdentityReport::fail(id, eq, params, {params, lhs.str(), "pole"});
  const auto rational_rhs = rhs->as_rational();
  if (!rational_rhs) {
    return IdentityReport::fail(
        id, eq, params,
        {params, lhs.str(), rhs->coeff.str() + "*sqrt(pi)^" + std::to_string(rhs->sqrtpi_pow)});
  }
  if (lhs == *rational_rhs) return IdentityReport::pass(id, eq, params);
  return IdentityReport::fail(id, eq, params, {params, lhs.str(), rational_rhs->str()});
}

IdentityReport verify_ode_eigen(FamilyKind kind, int n) {
  if (n < 0) throw std::invalid_argument("verify_ode_eigen: n >= 0");
  const MPoly p = classical_explicit(kind, n);
  const MPoly d1 = p.derivative_x();
  const MPoly d2 = d1.derivative_x();
  const MPoly x = MPoly::x();
  const MPoly x2 = x * x;
  const Rational nn(n);
  switch (kind) {
    case FamilyKind::MonicFib:
      return compare("ode-monic-fibonacci", "2.12", n_param(n), n_param(n),
                     (MPoly(1) + x2) * d2 + Rational(3) * x * d1, nn * (nn + Rational(2)) * p);
    case FamilyKind::MonicLucas:
      return compare("ode-monic-lucas", "2.24", n_param(n), n_param(n), (MPoly(4) + x2) * d2 + x * d1, nn * nn * p);
    case FamilyKind::ChebU:
      return compare("ode-chebyshev-u", "2.11", n_param(n), n_param(n),
                     (MPoly(1) - x2) * d2 - Rational(3) * x * d1 + nn * (nn + Rational(2)) * p, MPoly());
    case FamilyKind::ChebT:
      return compare("ode-chebyshev-t", "2.23", n_param(n), n_param(n), (MPoly(1) - x2) * d2 - x * d1 + nn * nn * p,
                     MPoly());
    default:
      throw std::invalid_argument("verify_ode_eigen: expects MonicFib, MonicLucas, ChebU or ChebT");
  }
}

std::string generating_function_tag(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Fib: return "2.3";
    case FamilyKind::Lucas: return "2.15";
    case FamilyKind::ChebU: return "2.13";
    case FamilyKind::ChebT: return "2.25";
    case FamilyKind::QFib: return "3.6";
    case FamilyKind::QLucas: return "3.12";
    default: return "";
  }
}

QGfForms q_generating_function_forms(FamilyKind kind, int order, const GfSample& sample) {
  if (kind != FamilyKind::QFib && kind != FamilyKind::QLucas) {
    throw std::invalid_argument("q_generating_function_forms: expects QFib or QLucas");
  }
  const auto N = static_cast<std::size_t>(order);
  const Rational& x = sample.x;
  const Rational& s = sample.s;
  const Rational& q = sample.q;

  TSeries lhs(N);
  for (int n = 0; n <= order; ++n) lhs[static_cast<std::size_t>(n)] = family_for_gf(kind, n).eval(x, s, q);

  // 1phi1(a; b | q; z) = sum_k (a;q)_k / ((b;q)_k (q;q)_k) (-1)^k q^{k(k-1)/2} z^k
  // with a = q, b = q x t, z = -q s t^2.
  TSeries phi11(N);
  for (int k = 0; 2 * k <= order; ++k) {
    const Rational scalar = q_pochhammer_at(q, q, k) / q_pochhammer_at(q, q, k) * Rational(k % 2 ? -1 : 1) *
                            q.pow(static_cast<long>(k) * (k - 1) / 2) * (-q * s).pow(k);
    TSeries b_poch = TSeries::constant(N, Rational(1));
    for (int j = 0; j < k; ++j) b_poch = b_poch * linear(N, Rational(1), -q * x * q.pow(j));
    phi11 += TSeries::monomial(N, static_cast<std::size_t>(2 * k), scalar) * b_poch.inverse();
  }
  TSeries one_minus_xt = linear(N, Rational(1), -x);
  const TSeries prefactor = kind == FamilyKind::QFib
                                ? TSeries::monomial(N, 1)
                                : TSeries::constant(N, Rational(1)) + TSeries::monomial(N, 2, s);
  phi11 = prefactor * one_minus_xt.inverse() * phi11;

  // 2phi1(a, q; 0 | q; z) = sum_k (a;q)_k (q;q)_k / (q;q)_k z^k with
  // a = -q s t / x and z = x t; each (a;q)_k z^k is cleared of 1/x as
  // t^k prod_{j<k} (x + q^{j+1} s t).
  TSeries phi21(N);
  for (int k = 0; k <= order; ++k) {
    TSeries term = TSeries::monomial(N, static_cast<std::size_t>(k), q_pochhammer_at(q, q, k) / q_pochhammer_at(q, q, k));
    for (int j = 0; j < k; ++j) term = term * linear(N, x, q.pow(j + 1) * s);
    phi21 += term;
  }
  phi21 = prefactor * phi21;
  return {std::move(lhs), std::move(phi11), std::move(phi21)};
}

IdentityReport verify_generating_function(FamilyKind kind, int order, const GfSample& sample) {
  if (order < 2) throw std::invalid_argument("verify_generating_function: order >= 2");
  const std::string id = "generating-function-" + std::string(family_name(kind));
  const std::string eq = generating_function_tag(kind);
  const std::string params = sample_str(sample) + ",N=" + std::to_string(order);
  const auto N = static_cast<std::size_t>(order);
  const Rational& x = sample.x;
  const Rational& s = sample.s;

  if (kind == FamilyKind::QFib || kind == FamilyKind::QLucas) {
    const QGfForms forms = q_generating_function_forms(kind, order, sample);
    if (!(forms.phi11 == forms.phi21)) {
      return IdentityReport::fail(id, eq + ",3.8", params,
                                  {params + " (1phi1 vs 2phi1)", series_str(forms.phi11), series_str(forms.phi21)});
    }
    return compare(id, eq, params, params, forms.lhs, forms.phi11);
  }

  TSeries lhs(N);
  for (int n = 0; n <= order; ++n) lhs[static_cast<std::size_t>(n)] = family_for_gf(kind, n).eval(x, s, Rational(1));

  TSeries rhs(N);
  TSeries fib_den(N);
  fib_den[0] = Rational(1);
  fib_den[1] = -x;
  fib_den[2] = -s;
  TSeries cheb_den(N);
  cheb_den[0] = Rational(1);
  cheb_den[1] = Rational(-2) * x;
  cheb_den[2] = Rational(1);
  switch (kind) {
    case FamilyKind::Fib:
      rhs = TSeries::monomial(N, 1) * series_mul_inv(fib_den);
      break;
    case FamilyKind::Lucas:
      rhs = (TSeries::constant(N, Rational(1)) + TSeries::monomial(N, 2, s)) * series_mul_inv(fib_den);
      break;
    case FamilyKind::ChebU:
      rhs = series_mul_inv(cheb_den);
      break;
    case FamilyKind::ChebT:
      rhs = linear(N, Rational(1), -x) * series_mul_inv(cheb_den);
      break;
    default:
      throw std::invalid_argument("verify_generating_function: unsupported family");
  }
  return compare(id, eq, params, params, lhs, rhs);
}

IdentityReport verify_chebyshev_gf_consistency(FamilyKind kind, int order, const Rational& x0, const Rational& sigma) {
  if (sigma.is_zero()) throw std::invalid_argument("verify_chebyshev_gf_consistency: sigma != 0");
  const auto N = static_cast<std::size_t>(order);
  const Rational s0 = sigma * sigma;
  const Rational w = x0 / (Rational(2) * sigma);
  const std::string params = "x=" + x0.str() + ",sigma=" + sigma.str() + ",N=" + std::to_string(order);
  TSeries fib_den(N);
  fib_den[0] = Rational(1);
  fib_den[1] = -x0;
  fib_den[2] = -s0;

  // sum of (-i)^n P_n(i w) with the i-powers folded into (-1)^k on x^{n-2k}
  auto real_form = [&](const MPoly& p, int n) {
    Rational v(0);
    for (const auto& [m, c] : p.terms()) {
      const int k = (n - m.ex) / 2;
      v += c * Rational(k % 2 ? -1 : 1) * w.pow(m.ex);
    }
    return v;
  };

  if (kind == FamilyKind::Fib) {
    TSeries cheb(N);
    for (int n = 0; n <= order; ++n) {
      cheb[static_cast<std::size_t>(n)] = sigma.pow(n) * real_form(classical_explicit(FamilyKind::ChebU, n), n);
    }
    // t^{-1} f_F = 1 / (1 - x t - s t^2)
    return compare("chebyshev-gf-fibonacci", "2.6,2.13,2.3", params, params, cheb, series_mul_inv(fib_den));
  }
  if (kind == FamilyKind::Lucas) {
    TSeries cheb(N);
    cheb[0] = Rational(1);
    for (int n = 1; n <= order; ++n) {
      cheb[static_cast<std::size_t>(n)] =
          Rational(2) * sigma.pow(n) * real_form(classical_explicit(FamilyKind::ChebT, n), n);
    }
    const TSeries rhs = (TSeries::constant(N, Rational(1)) + TSeries::monomial(N, 2, s0)) * series_mul_inv(fib_den);
    return compare("chebyshev-gf-lucas", "2.18,2.25,2.15", params, params, cheb, rhs);
  }
  throw std::invalid_argument("verify_chebyshev_gf_consistency: expects Fib or Lucas");
}

IdentityReport q_limit_check(FamilyKind kind, int n) {
  FamilyKind classical;
  std::string id;
  if (kind == FamilyKind::QFib) {
    classical = FamilyKind::Fib;
    id = "q-limit-fibonacci";
  } else if (kind == FamilyKind::QLucas) {
    classical = FamilyKind::Lucas;
    id = "q-limit-lucas";
  } else {
    throw std::invalid_argument("q_limit_check: expects QFib or QLucas");
  }
  return compare(id, "3.7", n_param(n), n_param(n), q_family_explicit(kind, n).substitute_q(Rational(1)),
                 classical_explicit(classical, n));
}

}  // namespace qfl
