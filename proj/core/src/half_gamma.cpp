#include "qfl/half_gamma.hpp"

#include <stdexcept>

namespace qfl {

PiPower HalfGamma::value() const {
  if (is_pole) throw std::domain_error("HalfGamma::value at a pole");
  return {coeff, sqrtpi_pow};
}

HalfGamma gamma_half(long twice_z) {
  if (twice_z % 2 == 0) {
    const long z = twice_z / 2;
    if (z <= 0) return {true, Rational(0), 0};
    return {false, factorial(z - 1), 0};
  }
  // z = m + 1/2
  if (twice_z > 0) {
    const long m = (twice_z - 1) / 2;
    // (2m)! / (4^m m!) sqrt(pi)
    return {false, factorial(2 * m) / (Rational(4).pow(m) * factorial(m)), 1};
  }
  // z = 1/2 - m, m >= 1
  const long m = (1 - twice_z) / 2;
  return {false, Rational(-4).pow(m) * factorial(m) / factorial(2 * m), 1};
}

std::optional<PiPower> gamma_ratio(std::span<const long> numer_twice, std::span<const long> denom_twice) {
  PiPower result;
  for (long n : numer_twice) {
    const HalfGamma g = gamma_half(n);
    if (g.is_pole) return std::nullopt;
    result = result * g.value();
  }
  for (long d : denom_twice) {
    const HalfGamma g = gamma_half(d);
    if (g.is_pole) return PiPower{Rational(0), 0};
    result = result / g.value();
  }
  return result;
}

}  // namespace qfl
