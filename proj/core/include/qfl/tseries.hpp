#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

#include "qfl/rational.hpp"

namespace qfl {

/// Truncated power series c0 + c1 t + ... + cN t^N over the rationals.
/// Every operation truncates at the smaller order of its operands.
class TSeries {
 public:
  explicit TSeries(std::size_t order) : coeffs_(order + 1) {}
  TSeries(std::size_t order, std::vector<Rational> coeffs);

  /// c * t^power truncated at `order`.
  static TSeries monomial(std::size_t order, std::size_t power, const Rational& c = Rational(1));
  static TSeries constant(std::size_t order, const Rational& c) { return monomial(order, 0, c); }

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
  Rational& operator[](std::size_t i) { return coeffs_.at(i); }

  TSeries truncate(std::size_t order) const;

  TSeries& operator+=(const TSeries& o);
  TSeries& operator-=(const TSeries& o);
  TSeries& operator*=(const Rational& c);

  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
  friend TSeries operator*(const TSeries& a, const TSeries& b);
  friend TSeries operator*(TSeries a, const Rational& c) { return a *= c; }

  /// Multiplicative inverse. Throws NotAUnit when the constant term is zero.
  TSeries inverse() const;

  friend bool operator==(const TSeries&, const TSeries&) = default;
  friend std::ostream& operator<<(std::ostream& os, const TSeries& s);

 private:
  std::vector<Rational> coeffs_;
};

/// v with u*v = 1 + O(t^{N+1}).
inline TSeries series_mul_inv(const TSeries& u) { return u.inverse(); }

}  // namespace qfl
