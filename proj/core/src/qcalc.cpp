#include "qfl/qcalc.hpp"

namespace qfl {

MPoly q_number(int n) {
  MPoly r;
  for (int j = 0; j < n; ++j) r.add_term({0, 0, j}, Rational(1));
  return r;
}

MPoly q_pochhammer(const MPoly& a, int n) {
  MPoly r(1);
  for (int k = 0; k < n; ++k) r *= MPoly(1) - a.shift_q(k);
  return r;
}

MPoly q_binomial(int n, int k) {
  if (k < 0 || k > n) return {};
  // q-Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k]
  std::vector<MPoly> row{MPoly(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<MPoly> next(static_cast<std::size_t>(m) + 1);
    next[0] = MPoly(1);
    next[static_cast<std::size_t>(m)] = MPoly(1);
    for (int j = 1; j < m; ++j) next[j] = row[j - 1] + row[j].shift_q(j);
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

MPoly hahn_dq(const MPoly& p) {
  MPoly r;
  for (const auto& [m, c] : p.terms()) {
    if (m.ex == 0) continue;
    for (int j = 0; j < m.ex; ++j) r.add_term({m.ex - 1, m.es, m.eq + j}, c);
  }
  return r;
}

MPoly invert_base(const MPoly& p) {
  MPoly r;
  for (const auto& [m, c] : p.terms()) r.add_term({m.ex, m.es, -m.eq}, c);
  return r;
}

QBinomialTable::QBinomialTable(int max_n) : max_n_(max_n) {
  rows_.reserve(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    std::vector<MPoly> row(static_cast<std::size_t>(n) + 1);
    row[0] = MPoly(1);
    row[static_cast<std::size_t>(n)] = MPoly(1);
    for (int k = 1; k < n; ++k) row[k] = rows_[n - 1][k - 1] + rows_[n - 1][k].shift_q(k);
    rows_.push_back(std::move(row));
  }
}

const MPoly& QBinomialTable::entry(int n, int k) const {
  if (n < 0 || n > max_n_ || k < 0 || k > n) return zero_;
  return rows_[n][k];
}

Rational q_pochhammer_at(const Rational& a, const Rational& base, int n) {
  Rational r(1);
  Rational power(1);
  for (int k = 0; k < n; ++k) {
    r *= Rational(1) - a * power;
    power *= base;
  }
  return r;
}

}  // namespace qfl
