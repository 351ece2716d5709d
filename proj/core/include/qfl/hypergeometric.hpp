#pragma once

#include <vector>

#include "qfl/rational.hpp"

namespace qfl {

/// Parameters of a terminating 2F1(a, b; c | z).
struct Hyper2F1Case {
  Rational a;
  Rational b;
  Rational c;
  Rational z;
};

/// Number of the non-positive integer upper parameter that terminates the
/// series, i.e. m for a = -m (or b = -m, whichever is smaller); -1 if the
/// series does not terminate.
long terminating_length(const Rational& a, const Rational& b);

/// Coefficients (a)_k (b)_k / ((c)_k k!) for k = 0..m. Throws PoleInRange if
/// (c)_k vanishes inside that range and std::invalid_argument if the series
/// does not terminate.
std::vector<Rational> hyper2f1_coefficients(const Rational& a, const Rational& b, const Rational& c);

/// Exact value of the terminating sum.
Rational hyper2f1_terminating(const Hyper2F1Case& c);

}  // namespace qfl
