#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "qfl/rational.hpp"

namespace qfl {

/// x^ex s^es q^eq. The q-exponent is signed so that q -> 1/q stays closed.
struct Monomial {
  int ex = 0;
  int es = 0;
  int eq = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  Monomial operator*(const Monomial& o) const { return {ex + o.ex, es + o.es, eq + o.eq}; }
};

/// Sparse polynomial in x and s with Laurent dependence on q and exact
/// rational coefficients. Zero coefficients are never stored, so structural
/// equality is polynomial equality.
class MPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  MPoly() = default;
  MPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MPoly(int c) : MPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  MPoly(std::initializer_list<std::pair<const Monomial, Rational>> terms);

  static MPoly monomial(Monomial m, const Rational& c = Rational(1));
  static MPoly x(int power = 1) { return monomial({power, 0, 0}); }
  static MPoly s(int power = 1) { return monomial({0, power, 0}); }
  static MPoly q(int power = 1) { return monomial({0, 0, power}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of a monomial (zero when absent).
  Rational coeff(const Monomial& m) const;

  int degree_x() const;
  int degree_s() const;
  int min_eq() const;
  int max_eq() const;

  /// Adds c*m in place, dropping the entry if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly& operator*=(const Rational& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(const MPoly& a) { return a * Rational(-1); }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  friend MPoly operator*(MPoly a, int c) { return a *= Rational(c); }
  friend MPoly operator*(int c, MPoly a) { return a *= Rational(c); }

  /// Multiplies every term by q^shift.
  MPoly shift_q(int shift) const;

  MPoly pow(int exponent) const;

  /// Exact value at (x, s, q). Throws ZeroBase for q = 0 with negative q-powers.
  Rational eval(const Rational& x, const Rational& s, const Rational& q) const;

  /// Floating evaluation, used on the quadrature side only.
  double eval_double(double x, double s, double q) const;

  /// Substitutes q by a rational value, leaving x and s symbolic.
  MPoly substitute_q(const Rational& q) const;

  /// Substitutes s by a rational value, leaving x and q symbolic.
  MPoly substitute_s(const Rational& s) const;

  /// d/dx, exact.
  MPoly derivative_x() const;

  friend bool operator==(const MPoly&, const MPoly&) = default;

  /// Human readable form, highest x-power first, e.g. "x^2 + q*s".
  std::string str() const;

  /// LaTeX rendering of each monomial as q^e s^f x^g.
  std::string latex() const;

  friend std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.str(); }

 private:
  Terms terms_;
};

/// Canonical JSON: array of {"ex","es","eq","num","den"} in (ex, es, eq) order.
nlohmann::json to_json(const MPoly& p);
MPoly mpoly_from_json(const nlohmann::json& j);

/// Free-function form of MPoly::eval.
Rational mpoly_eval(const MPoly& p, const Rational& x, const Rational& s, const Rational& q);

}  // namespace qfl
