#pragma once

#include <vector>

#include "qfl/mpoly.hpp"

namespace qfl {

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
MPoly q_number(int n);

/// (a; q)_n = prod_{k<n} (1 - a q^k).
MPoly q_pochhammer(const MPoly& a, int n);

/// Gaussian binomial coefficient; the zero polynomial outside 0 <= k <= n.
MPoly q_binomial(int n, int k);

/// Hahn operator on x-powers: x^n -> [n]_q x^{n-1}. s and q pass through.
MPoly hahn_dq(const MPoly& p);

/// q -> 1/q on every monomial.
MPoly invert_base(const MPoly& p);

/// Triangular table of q-binomials up to max_n, built once and read-only
/// afterwards.
class QBinomialTable {
 public:
  explicit QBinomialTable(int max_n);

  int max_n() const { return max_n_; }
  /// Zero polynomial outside the stored triangle.
  const MPoly& entry(int n, int k) const;

 private:
  int max_n_;
  std::vector<std::vector<MPoly>> rows_;
  MPoly zero_;
};

/// Scalar q-Pochhammer (a; base)_n at a rational base.
Rational q_pochhammer_at(const Rational& a, const Rational& base, int n);

}  // namespace qfl
