#include "qfl/hypergeometric.hpp"

#include <stdexcept>

#include "qfl/errors.hpp"

namespace qfl {

namespace {

long nonpositive_integer(const Rational& v) {
  if (!v.is_integer() || v.sign() > 0) return -1;
  return -v.numerator().get_si();
}

}  // namespace

long terminating_length(const Rational& a, const Rational& b) {
  const long ma = nonpositive_integer(a);
  const long mb = nonpositive_integer(b);
  if (ma < 0) return mb;
  if (mb < 0) return ma;
  return std::min(ma, mb);
}

std::vector<Rational> hyper2f1_coefficients(const Rational& a, const Rational& b, const Rational& c) {
  const long m = terminating_length(a, b);
  if (m < 0) throw std::invalid_argument("2F1 does not terminate: no non-positive integer upper parameter");
  std::vector<Rational> coeffs;
  coeffs.reserve(static_cast<std::size_t>(m) + 1);
  Rational term(1);
  coeffs.push_back(term);
  for (long k = 0; k < m; ++k) {
    const Rational lower = c + Rational(k);
    if (lower.is_zero()) throw PoleInRange("2F1: lower parameter (c)_k vanishes at k = " + std::to_string(k + 1));
    term *= (a + Rational(k)) * (b + Rational(k)) / (lower * Rational(k + 1));
    coeffs.push_back(term);
  }
  return coeffs;
}

Rational hyper2f1_terminating(const Hyper2F1Case& c) {
  const auto coeffs = hyper2f1_coefficients(c.a, c.b, c.c);
  Rational total(0);
  Rational power(1);
  for (const auto& v : coeffs) {
    total += v * power;
    power *= c.z;
  }
  return total;
}

}  // namespace qfl
