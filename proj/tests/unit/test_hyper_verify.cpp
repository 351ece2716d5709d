#include <gtest/gtest.h>

#include "qfl/hyper_verify.hpp"
#include "qfl/tseries.hpp"

using namespace qfl;

TEST(HyperVerify, Transforms) {
  for (int n = 0; n <= 16; ++n) {
    const IdentityReport r = verify_transform_210(n);
    EXPECT_TRUE(r.passed()) << n;
    EXPECT_EQ(r.equation, "2.10");
  }
  for (int n = 1; n <= 16; ++n) {
    const IdentityReport r = verify_transform_221(n);
    EXPECT_TRUE(r.passed()) << n;
    EXPECT_EQ(r.equation, "2.21");
  }
}

TEST(HyperVerify, GaussSecondSummationIncludingOddZeros) {
  for (int n = 0; n <= 12; ++n) {
    for (int l = 0; l <= n; ++l) {
      const IdentityReport a = verify_gauss_second_summation(l, n, GaussVariant::A);
      const IdentityReport b = verify_gauss_second_summation(l, n, GaussVariant::B);
      EXPECT_TRUE(a.passed()) << "A l=" << l << " n=" << n;
      EXPECT_TRUE(b.passed()) << "B l=" << l << " n=" << n;
    }
  }
  EXPECT_EQ(verify_gauss_second_summation(1, 3, GaussVariant::A).equation, "A.3");
  EXPECT_EQ(verify_gauss_second_summation(1, 3, GaussVariant::B).equation, "B.3");
}

TEST(HyperVerify, OdeEigenRelations) {
  for (FamilyKind k : {FamilyKind::MonicFib, FamilyKind::MonicLucas, FamilyKind::ChebU, FamilyKind::ChebT}) {
    for (int n = 0; n <= 16; ++n) EXPECT_TRUE(verify_ode_eigen(k, n).passed()) << family_name(k) << " " << n;
  }
  EXPECT_EQ(verify_ode_eigen(FamilyKind::ChebU, 3).equation, "2.11");
  EXPECT_EQ(verify_ode_eigen(FamilyKind::MonicFib, 3).equation, "2.12");
  EXPECT_EQ(verify_ode_eigen(FamilyKind::ChebT, 3).equation, "2.23");
  EXPECT_EQ(verify_ode_eigen(FamilyKind::MonicLucas, 3).equation, "2.24");
}

TEST(HyperVerify, GeneratingFunctions) {
  const std::vector<GfSample> samples{{Rational(1), Rational(1), Rational(1, 2)},
                                      {Rational(2, 3), Rational(-3, 5), Rational(3, 7)},
                                      {Rational(-5, 4), Rational(2), Rational(5, 3)}};
  for (FamilyKind k : {FamilyKind::Fib, FamilyKind::Lucas, FamilyKind::ChebU, FamilyKind::ChebT, FamilyKind::QFib,
                       FamilyKind::QLucas}) {
    for (const auto& sample : samples) {
      const IdentityReport r = verify_generating_function(k, 12, sample);
      EXPECT_TRUE(r.passed()) << family_name(k) << " " << (r.first_failure ? r.first_failure->parameters : "");
    }
  }
  EXPECT_EQ(generating_function_tag(FamilyKind::Fib), "2.3");
  EXPECT_EQ(generating_function_tag(FamilyKind::ChebU), "2.13");
  EXPECT_EQ(generating_function_tag(FamilyKind::Lucas), "2.15");
  EXPECT_EQ(generating_function_tag(FamilyKind::ChebT), "2.25");
  EXPECT_EQ(generating_function_tag(FamilyKind::QFib), "3.6");
  EXPECT_EQ(generating_function_tag(FamilyKind::QLucas), "3.12");
}

TEST(HyperVerify, QGeneratingFunctionFormsAgree) {
  const GfSample sample{Rational(2, 3), Rational(-3, 5), Rational(3, 7)};
  for (FamilyKind k : {FamilyKind::QFib, FamilyKind::QLucas}) {
    const QGfForms forms = q_generating_function_forms(k, 10, sample);
    EXPECT_EQ(forms.phi11, forms.phi21);
    EXPECT_EQ(forms.lhs, forms.phi11);
  }
}

TEST(HyperVerify, ChebyshevGeneratingFunctionConsistency) {
  for (const auto& [x0, sigma] : {std::pair{Rational(1), Rational(1)}, std::pair{Rational(3, 2), Rational(2, 3)},
                                  std::pair{Rational(-2, 5), Rational(-3)}}) {
    EXPECT_TRUE(verify_chebyshev_gf_consistency(FamilyKind::Fib, 12, x0, sigma).passed());
    EXPECT_TRUE(verify_chebyshev_gf_consistency(FamilyKind::Lucas, 12, x0, sigma).passed());
  }
}

TEST(HyperVerify, QLimit) {
  for (int n = 0; n <= 20; ++n) {
    EXPECT_TRUE(q_limit_check(FamilyKind::QFib, n).passed()) << n;
    EXPECT_TRUE(q_limit_check(FamilyKind::QLucas, n).passed()) << n;
  }
  EXPECT_EQ(q_limit_check(FamilyKind::QFib, 3).equation, "3.7");
}
