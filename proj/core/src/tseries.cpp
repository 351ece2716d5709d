#include "qfl/tseries.hpp"

#include <algorithm>

#include "qfl/errors.hpp"

namespace qfl {

TSeries::TSeries(std::size_t order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

TSeries TSeries::monomial(std::size_t order, std::size_t power, const Rational& c) {
  TSeries s(order);
  if (power <= order) s.coeffs_[power] = c;
  return s;
}

TSeries TSeries::truncate(std::size_t order) const {
  return TSeries(order, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + std::min(coeffs_.size(), order + 1)));
}

TSeries& TSeries::operator+=(const TSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TSeries& TSeries::operator-=(const TSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

TSeries& TSeries::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  TSeries r(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

TSeries TSeries::inverse() const {
  if (coeffs_[0].is_zero()) throw NotAUnit("series inverse: constant term is zero");
  const Rational inv0 = coeffs_[0].inverse();
  TSeries v(order());
  v.coeffs_[0] = inv0;
  for (std::size_t n = 1; n <= order(); ++n) {
    Rational acc(0);
    for (std::size_t k = 1; k <= n; ++k) acc += coeffs_[k] * v.coeffs_[n - k];
    v.coeffs_[n] = -acc * inv0;
  }
  return v;
}

std::ostream& operator<<(std::ostream& os, const TSeries& s) {
  os << "[";
  for (std::size_t i = 0; i < s.coeffs_.size(); ++i) os << (i ? ", " : "") << s.coeffs_[i];
  return os << "] + O(t^" << s.coeffs_.size() << ")";
}

}  // namespace qfl
