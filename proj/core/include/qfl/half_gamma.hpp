#pragma once

#include <optional>
#include <span>

#include "qfl/rational.hpp"

namespace qfl {

/// coeff * (sqrt(pi))^sqrtpi_pow, with an arbitrary integer power. Products
/// and quotients of gamma values at half-integers live in this group.
struct PiPower {
  Rational coeff{1};
  int sqrtpi_pow = 0;

  friend PiPower operator*(const PiPower& a, const PiPower& b) {
    return {a.coeff * b.coeff, a.sqrtpi_pow + b.sqrtpi_pow};
  }
  friend PiPower operator/(const PiPower& a, const PiPower& b) {
    return {a.coeff / b.coeff, a.sqrtpi_pow - b.sqrtpi_pow};
  }
  friend bool operator==(const PiPower& a, const PiPower& b) {
    if (a.coeff.is_zero() || b.coeff.is_zero()) return a.coeff == b.coeff;
    return a.coeff == b.coeff && a.sqrtpi_pow == b.sqrtpi_pow;
  }

  /// Rational value when the sqrt(pi) power is zero.
  std::optional<Rational> as_rational() const {
    if (coeff.is_zero() || sqrtpi_pow == 0) return coeff;
    return std::nullopt;
  }
};

/// Gamma at an integer or half-integer argument.
struct HalfGamma {
  bool is_pole = false;
  Rational coeff{0};
  int sqrtpi_pow = 0;

  PiPower value() const;
};

/// Gamma(twice_z / 2), exact. Poles at the non-positive integers.
HalfGamma gamma_half(long twice_z);

/// prod Gamma(numer) / prod Gamma(denom), arguments given as twice_z.
/// A pole in the denominator annihilates the ratio (returns zero); a pole in
/// the numerator has no finite value (nullopt).
std::optional<PiPower> gamma_ratio(std::span<const long> numer_twice, std::span<const long> denom_twice);

}  // namespace qfl
