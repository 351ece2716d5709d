#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qfl/quadrature.hpp"

using qfl::QuadratureRule;

TEST(Quadrature, FrozenFivePointRule) {
  // numpy.polynomial.hermite.hermgauss(5)
  const double nodes[] = {-2.0201828704560856, -0.9585724646138185, 0.0, 0.9585724646138185, 2.0201828704560856};
  const double weights[] = {0.019953242059045917, 0.3936193231522411, 0.9453087204829418, 0.3936193231522411,
                            0.019953242059045917};
  const QuadratureRule rule(5);
  ASSERT_EQ(rule.count(), 5);
  for (int i = 0; i < 5; ++i) {
    EXPECT_NEAR(rule.nodes()[i], nodes[i], 1e-14);
    EXPECT_NEAR(rule.weights()[i], weights[i], 1e-14);
  }
}

TEST(Quadrature, ExactForPolynomialMoments) {
  for (int count : {4, 16, 64, 128, 200, 256, 300}) {
    const QuadratureRule rule(count);
    for (int k = 0; 2 * k <= 2 * count - 1 && k <= 12; ++k) {
      const double got = rule.integrate([k](double u) { return std::pow(u, 2 * k); });
      const double want = std::tgamma(k + 0.5);
      EXPECT_NEAR(got / want, 1.0, 1e-12) << "count=" << count << " k=" << k;
      const double odd = rule.integrate([k](double u) { return std::pow(u, 2 * k + 1); });
      EXPECT_NEAR(odd, 0.0, 1e-10 * want);
    }
  }
}

TEST(Quadrature, NodesSortedAndSymmetric) {
  const QuadratureRule rule(96);
  double total = 0;
  for (int i = 0; i < rule.count(); ++i) {
    if (i > 0) EXPECT_LT(rule.nodes()[i - 1], rule.nodes()[i]);
    EXPECT_DOUBLE_EQ(rule.nodes()[i], -rule.nodes()[rule.count() - 1 - i]);
    EXPECT_GT(rule.weights()[i], 0.0);
    total += rule.weights()[i];
  }
  EXPECT_NEAR(total, std::sqrt(std::numbers::pi), 1e-13);
}

TEST(Quadrature, GaussianCharacteristicFunction) {
  // int e^{-u^2} cos(b u) du = sqrt(pi) e^{-b^2/4}
  const QuadratureRule rule(64);
  for (double b : {0.0, 0.5, 2.0, 5.0}) {
    const double got = rule.integrate([b](double u) { return std::cos(b * u); });
    EXPECT_NEAR(got, std::sqrt(std::numbers::pi) * std::exp(-b * b / 4), 1e-13);
  }
}

TEST(Quadrature, RejectsEmptyRule) { EXPECT_ANY_THROW(QuadratureRule(0)); }
