#include "qfl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qfl {

namespace {

struct HermiteEval {
  long double p = 0.0L;     // orthonormal h_n(z)
  long double prev = 0.0L;  // h_{n-1}(z)
  int above = 0;            // zeros of h_n greater than z
};

HermiteEval eval_hermite(int n, long double z) {
  const long double pim4 = 0.7511255444649424828587030047762276930510L;  // pi^{-1/4}
  long double p1 = pim4;
  long double p2 = 0.0L;
  int changes = 0;
  bool positive = true;
  for (int j = 0; j < n; ++j) {
    const long double p3 = p2;
    p2 = p1;
    p1 = z * std::sqrt(2.0L / (j + 1)) * p2 - std::sqrt(static_cast<long double>(j) / (j + 1)) * p3;
    const bool now = p1 > 0.0L || (p1 == 0.0L && !positive);
    if (now != positive) ++changes;
    positive = now;
  }
  return {p1, p2, changes};
}

}  // namespace

QuadratureRule::QuadratureRule(int count) {
  if (count < 1) throw std::invalid_argument("QuadratureRule: count >= 1");
  const int n = count;
  nodes_.assign(static_cast<std::size_t>(n), 0.0);
  weights_.assign(static_cast<std::size_t>(n), 0.0);

  // Roots are found largest first. The Sturm count of the recurrence brackets
  // the i-th root; Newton steps polish it and fall back to bisection whenever
  // they leave the bracket.
  const int half = (n + 1) / 2;
  long double upper = std::sqrt(static_cast<long double>(2 * n + 1)) + 1.0L;
  for (int i = 0; i < half; ++i) {
    long double lo = 0.0L;
    long double hi = upper;
    if (n % 2 == 1 && i == half - 1) {
      hi = lo;
    } else {
      // zeros above lo must exceed i, zeros above hi must be at most i
      while (hi - lo > 1e-6L * std::max(1.0L, hi)) {
        const long double mid = 0.5L * (lo + hi);
        if (eval_hermite(n, mid).above > i) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
    }
    long double z = 0.5L * (lo + hi);
    HermiteEval e = eval_hermite(n, z);
    for (int iter = 0; iter < 100 && hi > lo; ++iter) {
      const long double pp = std::sqrt(2.0L * n) * e.prev;
      long double next = z - e.p / pp;
      if (!(next > lo && next < hi)) next = 0.5L * (lo + hi);
      const long double step = std::fabs(next - z);
      z = next;
      e = eval_hermite(n, z);
      if (e.above > i) {
        lo = z;
      } else {
        hi = z;
      }
      if (step <= 1e-18L * std::max(1.0L, std::fabs(z))) break;
    }
    if (n % 2 == 1 && i == half - 1) z = 0.0L;
    e = eval_hermite(n, z);
    const long double pp = std::sqrt(2.0L * n) * e.prev;
    const long double w = 2.0L / (pp * pp);
    nodes_[static_cast<std::size_t>(n - 1 - i)] = static_cast<double>(z);
    nodes_[static_cast<std::size_t>(i)] = -static_cast<double>(z);
    weights_[static_cast<std::size_t>(n - 1 - i)] = static_cast<double>(w);
    weights_[static_cast<std::size_t>(i)] = static_cast<double>(w);
    upper = z;
  }
}

}  // namespace qfl
