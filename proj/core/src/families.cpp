#include "qfl/families.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "qfl/errors.hpp"
#include "qfl/hypergeometric.hpp"
#include "qfl/qcalc.hpp"

namespace qfl {

namespace {

constexpr std::array<std::pair<FamilyKind, std::string_view>, 15> kFamilyNames{{
    {FamilyKind::Fib, "fib"},
    {FamilyKind::Lucas, "lucas"},
    {FamilyKind::MonicFib, "monicfib"},
    {FamilyKind::MonicLucas, "moniclucas"},
    {FamilyKind::ChebU, "chebu"},
    {FamilyKind::ChebT, "chebt"},
    {FamilyKind::QFib, "qfib"},
    {FamilyKind::QLucas, "qlucas"},
    {FamilyKind::QFibInv, "qfibinv"},
    {FamilyKind::QLucasInv, "qlucasinv"},
    {FamilyKind::RFib, "rfib"},
    {FamilyKind::RLucas, "rlucas"},
    {FamilyKind::SU, "su"},
    {FamilyKind::ST, "st"},
    {FamilyKind::LittleQJacobi, "lqjacobi"},
}};

constexpr std::array<FamilyKind, 15> kAllFamilies = [] {
  std::array<FamilyKind, 15> out{};
  for (std::size_t i = 0; i < kFamilyNames.size(); ++i) out[i] = kFamilyNames[i].first;
  return out;
}();

void require_nonnegative(int n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": index must be non-negative");
}

// Dense coefficient vector of a polynomial in q alone (no x, s), starting at
// q^0. Throws if the polynomial has negative q-powers or involves x or s.
std::vector<Rational> dense_in_q(const MPoly& p) {
  std::vector<Rational> out;
  for (const auto& [m, c] : p.terms()) {
    if (m.ex != 0 || m.es != 0 || m.eq < 0) throw std::logic_error("dense_in_q: not a polynomial in q");
    if (out.size() <= static_cast<std::size_t>(m.eq)) out.resize(static_cast<std::size_t>(m.eq) + 1);
    out[static_cast<std::size_t>(m.eq)] = c;
  }
  return out;
}

// Exact quotient of two polynomials in q; throws if the division leaves a remainder.
MPoly divide_exact_in_q(const MPoly& num, const MPoly& den) {
  std::vector<Rational> r = dense_in_q(num);
  const std::vector<Rational> d = dense_in_q(den);
  if (d.empty()) throw std::domain_error("divide_exact_in_q: division by zero polynomial");
  if (r.size() < d.size()) {
    if (num.is_zero()) return {};
    throw std::logic_error("divide_exact_in_q: inexact division");
  }
  std::vector<Rational> quotient(r.size() - d.size() + 1);
  for (std::size_t i = quotient.size(); i-- > 0;) {
    const Rational f = r[i + d.size() - 1] / d.back();
    quotient[i] = f;
    for (std::size_t j = 0; j < d.size(); ++j) r[i + j] -= f * d[j];
  }
  for (const auto& v : r) {
    if (!v.is_zero()) throw std::logic_error("divide_exact_in_q: inexact division");
  }
  MPoly out;
  for (std::size_t i = 0; i < quotient.size(); ++i) out.add_term({0, 0, static_cast<int>(i)}, quotient[i]);
  return out;
}

MPoly xs_monomial(int ex, int es) { return MPoly::monomial({ex, es, 0}); }

// Fixed-base value q0^e with a clear error for q0 = 0.
Rational base_pow(const Rational& q0, long e) {
  if (q0.is_zero()) throw DegenerateBase("base q = 0 is not admissible");
  return q0.pow(e);
}

}  // namespace

std::string_view family_name(FamilyKind kind) {
  for (const auto& [k, name] : kFamilyNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

FamilyKind parse_family(std::string_view name) {
  for (const auto& [k, n] : kFamilyNames) {
    if (n == name) return k;
  }
  throw ParseError("unknown family '" + std::string(name) + "'");
}

std::span<const FamilyKind> all_families() { return kAllFamilies; }

MPoly coeff_law_f(int n, int k, const CoeffPerturbation* perturb) {
  if (k < 0 || 2 * k > n) return {};
  MPoly c = q_binomial(n - k, k).shift_q(k * (k + 1) / 2);
  if (perturb != nullptr && perturb->n == n && perturb->k == k) c += MPoly(perturb->delta);
  return c;
}

MPoly coeff_law_l(int n, int k) {
  if (k < 0 || 2 * k > n) return {};
  if (k == 0) return MPoly(1);
  const MPoly ratio = divide_exact_in_q(q_number(n) * q_binomial(n - k, k), q_number(n - k));
  return ratio.shift_q(k * (k - 1) / 2);
}

CoeffLaw coeff_law(CoeffKind kind, int n, int k) {
  return {kind, n, k, kind == CoeffKind::F ? coeff_law_f(n, k) : coeff_law_l(n, k)};
}

MPoly classical_recurrence(FamilyKind kind, int n) {
  require_nonnegative(n, "classical_recurrence");
  const MPoly x = MPoly::x();
  const MPoly s = MPoly::s();
  MPoly prev, cur;      // members n0-1 and n0
  MPoly step_a, step_b;  // member_{m+1} = step_a * member_m + step_b * member_{m-1}
  int first = 1;        // index of `cur`
  switch (kind) {
    case FamilyKind::Fib:
      if (n == 0) return {};
      prev = MPoly();
      cur = MPoly(1);
      step_a = x;
      step_b = s;
      break;
    case FamilyKind::Lucas:
      if (n == 0) return MPoly(1);
      if (n == 1) return x;
      prev = x;
      cur = x * x + Rational(2) * s;
      first = 2;
      step_a = x;
      step_b = s;
      break;
    case FamilyKind::MonicFib:
      if (n == 0) return MPoly(1);
      prev = MPoly(1);
      cur = x;
      step_a = x;
      step_b = MPoly(Rational(1, 4));
      break;
    case FamilyKind::MonicLucas:
      if (n == 0) return MPoly(1);
      if (n == 1) return x;
      prev = x;
      cur = x * x + MPoly(2);
      first = 2;
      step_a = x;
      step_b = MPoly(1);
      break;
    case FamilyKind::ChebU:
      if (n == 0) return MPoly(1);
      prev = MPoly(1);
      cur = Rational(2) * x;
      step_a = Rational(2) * x;
      step_b = MPoly(-1);
      break;
    case FamilyKind::ChebT:
      if (n == 0) return MPoly(1);
      prev = MPoly(1);
      cur = x;
      step_a = Rational(2) * x;
      step_b = MPoly(-1);
      break;
    default:
      throw std::invalid_argument("classical_recurrence: not a classical family");
  }
  for (int m = first; m < n; ++m) {
    MPoly next = step_a * cur + step_b * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

MPoly classical_explicit(FamilyKind kind, int n) {
  require_nonnegative(n, "classical_explicit");
  MPoly out;
  switch (kind) {
    case FamilyKind::Fib: {
      if (n == 0) return {};
      const int m = n - 1;
      for (int k = 0; 2 * k <= m; ++k) out += binomial(m - k, k) * xs_monomial(m - 2 * k, k);
      return out;
    }
    case FamilyKind::Lucas:
      if (n == 0) return MPoly(1);
      for (int k = 0; 2 * k <= n; ++k) {
        out += Rational(n) / Rational(n - k) * binomial(n - k, k) * xs_monomial(n - 2 * k, k);
      }
      return out;
    case FamilyKind::ChebU:
      for (int k = 0; 2 * k <= n; ++k) {
        out += Rational(k % 2 ? -1 : 1) * binomial(n - k, k) * Rational(2).pow(n - 2 * k) * MPoly::x(n - 2 * k);
      }
      return out;
    case FamilyKind::ChebT:
      if (n == 0) return MPoly(1);
      for (int k = 0; 2 * k <= n; ++k) {
        const Rational c = Rational(n, 2) * Rational(k % 2 ? -1 : 1) * factorial(n - k - 1) /
                           (factorial(k) * factorial(n - 2 * k)) * Rational(2).pow(n - 2 * k);
        out += c * MPoly::x(n - 2 * k);
      }
      return out;
    case FamilyKind::MonicFib:
    case FamilyKind::MonicLucas: {
      // x^n 2F1(-n/2, (1-n)/2; c | -w/x^2) with (c, w) = (-n, 1) or (1-n, 4)
      const bool lucas = kind == FamilyKind::MonicLucas;
      const Rational lower = lucas ? Rational(1 - n) : Rational(-n);
      const Rational w = lucas ? Rational(4) : Rational(1);
      const auto coeffs = hyper2f1_coefficients(Rational(-n, 2), Rational(1 - n, 2), lower);
      for (std::size_t m = 0; m < coeffs.size(); ++m) {
        const int mi = static_cast<int>(m);
        out += coeffs[m] * (-w).pow(mi) * MPoly::x(n - 2 * mi);
      }
      return out;
    }
    default:
      throw std::invalid_argument("classical_explicit: not a classical family");
  }
}

MPoly q_family_recurrence(FamilyKind kind, int n) {
  require_nonnegative(n, "q_family_recurrence");
  const MPoly x = MPoly::x();
  const MPoly s = MPoly::s();
  const MPoly q_minus_one_s = (MPoly::q() - MPoly(1)) * s;
  MPoly prev, cur;
  int first = 1;
  if (kind == FamilyKind::QFib) {
    if (n == 0) return {};
    prev = MPoly();
    cur = MPoly(1);
  } else if (kind == FamilyKind::QLucas) {
    if (n == 0) return MPoly(1);
    if (n == 1) return x;
    prev = x;
    cur = x * x + (MPoly(1) + MPoly::q()) * s;
    first = 2;
  } else {
    throw std::invalid_argument("q_family_recurrence: expects QFib or QLucas");
  }
  for (int m = first; m < n; ++m) {
    MPoly next = x * cur + q_minus_one_s * hahn_dq(cur) + s * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

MPoly q_family_explicit(FamilyKind kind, int n, const CoeffPerturbation* perturb) {
  require_nonnegative(n, "q_family_explicit");
  MPoly out;
  if (kind == FamilyKind::QFib) {
    if (n == 0) return {};
    const int m = n - 1;
    for (int k = 0; 2 * k <= m; ++k) out += coeff_law_f(m, k, perturb) * xs_monomial(m - 2 * k, k);
    return out;
  }
  if (kind == FamilyKind::QLucas) {
    for (int k = 0; 2 * k <= n; ++k) out += coeff_law_l(n, k) * xs_monomial(n - 2 * k, k);
    return out;
  }
  throw std::invalid_argument("q_family_explicit: expects QFib or QLucas");
}

MPoly q_family_inverted(FamilyKind kind, int n) {
  require_nonnegative(n, "q_family_inverted");
  MPoly out;
  if (kind == FamilyKind::QFibInv) {
    if (n == 0) return {};
    const int m = n - 1;
    for (int k = 0; 2 * k <= m; ++k) {
      out += coeff_law_f(m, k).shift_q(k * (k - m - 1)) * xs_monomial(m - 2 * k, k);
    }
    return out;
  }
  if (kind == FamilyKind::QLucasInv) {
    for (int k = 0; 2 * k <= n; ++k) out += coeff_law_l(n, k).shift_q(k * (k - n)) * xs_monomial(n - 2 * k, k);
    return out;
  }
  throw std::invalid_argument("q_family_inverted: expects QFibInv or QLucasInv");
}

MPoly r_s_family(FamilyKind kind, int n, const Rational& q0) {
  require_nonnegative(n, "r_s_family");
  const bool lucas = kind == FamilyKind::RLucas || kind == FamilyKind::ST;
  const bool flipped = kind == FamilyKind::SU || kind == FamilyKind::ST;
  if (!lucas && kind != FamilyKind::RFib && kind != FamilyKind::SU) {
    throw std::invalid_argument("r_s_family: expects RFib, RLucas, SU or ST");
  }
  const Rational q2 = base_pow(q0, 2);
  const Rational upper1 = base_pow(q0, -n);
  const Rational upper2 = base_pow(q0, 1 - n);
  const Rational lower = lucas ? base_pow(q0, 2 * (1 - n)) : base_pow(q0, -2 * n);
  // argument of the series without the 1/x^2: -1/q (Fibonacci) or -q (Lucas)
  Rational arg = lucas ? -q0 : -q0.inverse();
  if (flipped) arg = -arg;

  MPoly out;
  Rational term(1);
  Rational power(1);  // q2^j
  for (int k = 0; 2 * k <= n; ++k) {
    if (k > 0) {
      const Rational den = (Rational(1) - lower * power) * (Rational(1) - q2 * power);
      if (den.is_zero()) {
        throw DegenerateBase("r/s family: denominator factor vanishes at q = " + q0.str() + ", k = " +
                             std::to_string(k));
      }
      term *= (Rational(1) - upper1 * power) * (Rational(1) - upper2 * power) / den * arg;
      power *= q2;
    }
    out += term * MPoly::x(n - 2 * k);
  }
  return out;
}

MPoly little_q_jacobi(int n, const Rational& a, const Rational& b, const Rational& base) {
  require_nonnegative(n, "little_q_jacobi");
  const Rational upper1 = base_pow(base, -n);
  const Rational upper2 = a * b * base.pow(n + 1);
  const Rational lower = a * base;
  MPoly out;
  Rational term(1);
  Rational power(1);  // base^j
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      const Rational den = (Rational(1) - lower * power) * (Rational(1) - base * power);
      if (den.is_zero()) {
        throw DegenerateBase("little q-Jacobi: denominator factor vanishes at k = " + std::to_string(k));
      }
      term *= (Rational(1) - upper1 * power) * (Rational(1) - upper2 * power) / den * base;
      power *= base;
    }
    out += term * MPoly::x(k);
  }
  return out;
}

MPoly compose_x_power(const MPoly& p, int power) {
  MPoly out;
  for (const auto& [m, c] : p.terms()) out.add_term({m.ex * power, m.es, m.eq}, c);
  return out;
}

bool check_interrelation(int n) {
  if (n < 1) throw std::invalid_argument("check_interrelation: n >= 1");
  const MPoly lhs = q_family_explicit(FamilyKind::QLucas, n);
  const MPoly rhs =
      q_family_explicit(FamilyKind::QFib, n + 1) + MPoly::s() * q_family_explicit(FamilyKind::QFib, n - 1);
  return lhs == rhs;
}

bool check_chebyshev_connection(FamilyKind kind, int n) {
  require_nonnegative(n, "check_chebyshev_connection");
  if (kind == FamilyKind::Fib) {
    const MPoly monic = classical_recurrence(FamilyKind::MonicFib, n);
    const MPoly cheb = classical_recurrence(FamilyKind::ChebU, n);
    // p_n(x) = (-i/2)^n U_n(ix): x^{n-2k} picks up 2^{-n} (-1)^k
    MPoly mapped;
    for (const auto& [m, c] : cheb.terms()) {
      if ((n - m.ex) % 2 != 0) return false;
      const int k = (n - m.ex) / 2;
      mapped.add_term(m, c * Rational(2).pow(-n) * Rational(k % 2 ? -1 : 1));
    }
    if (!(mapped == monic)) return false;
    MPoly closed;
    for (int k = 0; 2 * k <= n; ++k) closed += Rational(2).pow(-2 * k) * binomial(n - k, k) * MPoly::x(n - 2 * k);
    if (!(closed == monic)) return false;
    // F_{n+1}(x,s) = (2 sqrt s)^n p_n(x / (2 sqrt s))
    MPoly rescaled;
    for (const auto& [m, c] : monic.terms()) {
      const int k = (n - m.ex) / 2;
      rescaled.add_term({m.ex, k, 0}, c * Rational(4).pow(k));
    }
    return rescaled == classical_recurrence(FamilyKind::Fib, n + 1);
  }
  if (kind == FamilyKind::Lucas) {
    const MPoly monic = classical_recurrence(FamilyKind::MonicLucas, n);
    if (n == 0) return monic == MPoly(1) && classical_recurrence(FamilyKind::Lucas, 0) == MPoly(1);
    const MPoly cheb = classical_recurrence(FamilyKind::ChebT, n);
    // p_n(x) = 2 (-i)^n T_n(ix/2): x^{n-2k} picks up 2 (-1)^k 2^{2k-n}
    MPoly mapped;
    for (const auto& [m, c] : cheb.terms()) {
      if ((n - m.ex) % 2 != 0) return false;
      const int k = (n - m.ex) / 2;
      mapped.add_term(m, c * Rational(2) * Rational(k % 2 ? -1 : 1) * Rational(2).pow(2 * k - n));
    }
    if (!(mapped == monic)) return false;
    MPoly closed;
    for (int k = 0; 2 * k <= n; ++k) {
      closed += Rational(n) / Rational(n - k) * binomial(n - k, k) * MPoly::x(n - 2 * k);
    }
    if (!(closed == monic)) return false;
    // L_n(x,s) = s^{n/2} p_n(x / sqrt s)
    MPoly rescaled;
    for (const auto& [m, c] : monic.terms()) rescaled.add_term({m.ex, (n - m.ex) / 2, 0}, c);
    return rescaled == classical_recurrence(FamilyKind::Lucas, n);
  }
  throw std::invalid_argument("check_chebyshev_connection: expects Fib or Lucas");
}

namespace {

bool r_recurrence_holds(const MPoly& next, const MPoly& cur, const MPoly& prev, const Rational& coeff) {
  return next == MPoly::x() * cur + coeff * prev;
}

}  // namespace

RecurrenceReport probe_r_recurrence(int n_max, std::span<const Rational> q_samples) {
  if (n_max < 2) throw std::invalid_argument("probe_r_recurrence: n_max >= 2");
  RecurrenceReport report;
  report.n_max = n_max;
  if (q_samples.empty()) return report;
  for (FamilyKind kind : {FamilyKind::RFib, FamilyKind::RLucas}) {
    RecurrenceKindReport kr;
    kr.kind = kind;
    kr.samples.assign(q_samples.begin(), q_samples.end());
    std::map<Rational, std::vector<MPoly>> members;
    for (const auto& q0 : q_samples) {
      auto& v = members[q0];
      for (int n = 0; n <= n_max; ++n) v.push_back(r_s_family(kind, n, q0));
    }
    for (int n = 1; n < n_max; ++n) {
      RecurrenceProbeRow row{n, true, true};
      for (const auto& q0 : q_samples) {
        const auto& r = members.at(q0);
        const Rational qn = q0.pow(n);
        const Rational printed = q0.pow(n - 1) / ((Rational(1) + qn) * (Rational(1) + qn * q0));
        const Rational shifted = q0.pow(n - 1) / ((Rational(1) + q0.pow(n - 1)) * (Rational(1) + qn));
        row.printed_holds = row.printed_holds && r_recurrence_holds(r[n + 1], r[n], r[n - 1], printed);
        row.shifted_holds = row.shifted_holds && r_recurrence_holds(r[n + 1], r[n], r[n - 1], shifted);
      }
      if (!row.printed_holds && !kr.printed_first_failure) kr.printed_first_failure = n;
      if (!row.shifted_holds && !kr.shifted_first_failure) kr.shifted_first_failure = n;
      kr.rows.push_back(row);
    }
    kr.printed_holds_all = !kr.printed_first_failure.has_value();
    kr.shifted_holds_all = !kr.shifted_first_failure.has_value();
    for (auto it = kr.rows.rbegin(); it != kr.rows.rend() && it->shifted_holds; ++it) kr.shifted_holds_from = it->n;
    report.kinds.push_back(std::move(kr));
  }
  return report;
}

std::array<bool, 4> little_qjacobi_relation_status(int n, const Rational& q0) {
  require_nonnegative(n, "little_qjacobi_relation_status");
  const Rational q = q0;
  const Rational q2 = base_pow(q, 2);
  const Rational qinv = q.inverse();
  const Rational sign_pow = Rational(n % 2 ? -1 : 1) * q.pow(static_cast<long>(n) * (n - 1));
  auto prefactor = [&](long upper_exp, long lower_exp) {
    const Rational den = q_pochhammer_at(q.pow(lower_exp), q2, n);
    if (den.is_zero()) throw DegenerateBase("little q-Jacobi prefactor vanishes at q = " + q.str());
    return sign_pow * q_pochhammer_at(q.pow(upper_exp), q2, n) / den;
  };
  const MPoly x = MPoly::x();
  std::array<bool, 4> status{};
  status[0] = r_s_family(FamilyKind::SU, 2 * n, q) ==
              prefactor(1, 2 * (n + 1)) * compose_x_power(little_q_jacobi(n, qinv, q, q2), 2);
  status[1] = r_s_family(FamilyKind::SU, 2 * n + 1, q) ==
              prefactor(3, 2 * (n + 2)) * (x * compose_x_power(little_q_jacobi(n, q, q, q2), 2));
  status[2] = r_s_family(FamilyKind::ST, 2 * n, q) ==
              prefactor(1, 2 * n) * compose_x_power(little_q_jacobi(n, qinv, qinv, q2), 2);
  status[3] = r_s_family(FamilyKind::ST, 2 * n + 1, q) ==
              prefactor(3, 2 * (n + 1)) * (x * compose_x_power(little_q_jacobi(n, q, qinv, q2), 2));
  return status;
}

bool check_little_qjacobi_relations(int n, std::span<const Rational> q_samples) {
  std::vector<Rational> distinct(q_samples.begin(), q_samples.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() < 3) throw std::invalid_argument("check_little_qjacobi_relations: need >= 3 distinct samples");
  for (const auto& q0 : distinct) {
    for (bool ok : little_qjacobi_relation_status(n, q0)) {
      if (!ok) return false;
    }
  }
  return true;
}

MPoly family_member(FamilyKind kind, int n, const FamilyParams& params) {
  auto need_q = [&]() -> const Rational& {
    if (!params.q) throw std::invalid_argument(std::string(family_name(kind)) + " requires a base q");
    return *params.q;
  };
  switch (kind) {
    case FamilyKind::Fib:
    case FamilyKind::Lucas:
    case FamilyKind::MonicFib:
    case FamilyKind::MonicLucas:
    case FamilyKind::ChebU:
    case FamilyKind::ChebT:
      return classical_explicit(kind, n);
    case FamilyKind::QFib:
    case FamilyKind::QLucas:
      return q_family_explicit(kind, n);
    case FamilyKind::QFibInv:
    case FamilyKind::QLucasInv:
      return q_family_inverted(kind, n);
    case FamilyKind::RFib:
    case FamilyKind::RLucas:
    case FamilyKind::SU:
    case FamilyKind::ST:
      return r_s_family(kind, n, need_q());
    case FamilyKind::LittleQJacobi:
      return little_q_jacobi(n, params.a, params.b, need_q());
  }
  throw std::invalid_argument("family_member: unknown kind");
}

}  // namespace qfl
