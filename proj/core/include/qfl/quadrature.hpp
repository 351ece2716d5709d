#pragma once

#include <vector>

namespace qfl {

/// Gauss-Hermite rule for the weight exp(-u^2) on the real line. Nodes are
/// stored in increasing order and are exactly antisymmetric.
class QuadratureRule {
 public:
  explicit QuadratureRule(int count);

  int count() const { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

  /// sum_i w_i f(u_i)
  template <typename F>
  auto integrate(F&& f) const {
    using R = decltype(f(0.0));
    R total{};
    for (std::size_t i = 0; i < nodes_.size(); ++i) total += weights_[i] * f(nodes_[i]);
    return total;
  }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

}  // namespace qfl
