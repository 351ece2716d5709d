#pragma once

#include <stdexcept>
#include <string>

namespace qfl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Negative power of q evaluated at q = 0.
class ZeroBase : public Error {
 public:
  using Error::Error;
};

/// Truncated series with a vanishing constant term has no inverse.
class NotAUnit : public Error {
 public:
  using Error::Error;
};

/// A denominator q-factor vanishes at the requested base.
class DegenerateBase : public Error {
 public:
  using Error::Error;
};

/// A lower Pochhammer symbol vanishes inside a terminating sum.
class PoleInRange : public Error {
 public:
  using Error::Error;
};

/// Real argument outside the admissible domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Quadrature did not converge under node doubling.
class RuleTooSmall : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (rationals, family names, ...).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qfl
