#include "wres/ratfun/ratfun.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "properties.hpp"
#include "wres/error.hpp"

namespace wres {
namespace {

const GaussianRational kI = GaussianRational::i();
GaussianRational q(long num, long den) { return GaussianRational::fraction(num, den); }

TEST(RatFun, CanonicalFormCancelsCommonFactors) {
  // (xi^2 + 1) / (1 + xi^2)^2 = 1 / (1 + xi^2)
  const RatFun f = RatFun(XiPoly::linear_power(kI, 1) * XiPoly::linear_power(-kI, 1), 2, 2);
  EXPECT_EQ(f, RatFun::norm_power(-1));
  EXPECT_EQ(f.pole_order_plus(), 1u);
  EXPECT_EQ(f.pole_order_minus(), 1u);
  EXPECT_EQ(RatFun::norm_power(1) * RatFun::norm_power(-1), RatFun(1));
}

TEST(RatFun, ProjectionOfInverseNorm) {
  // pi+ 1/(1+xi^2) = (-i/2)/(xi-i)
  EXPECT_EQ(rf_pi_plus(RatFun::norm_power(-1)), RatFun(XiPoly(ScalarPoly(q(-1, 2) * kI)), 1, 0));
  // Gamma+ integral of 1/(1+xi^2) is pi
  EXPECT_EQ(rf_contour_plus_over_pi(RatFun::norm_power(-1)), ScalarPoly(1));
  // and of 1/(1+xi^2)^2 is pi/2
  EXPECT_EQ(rf_contour_plus_over_pi(RatFun::norm_power(-2)), ScalarPoly(q(1, 2)));
}

TEST(RatFun, PartialFractionsRecombine) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const RatFun f = testing::random_ratfun(rng, 8) * RatFun(XiPoly::xi() * XiPoly::xi());
    EXPECT_EQ(rf_partial_fractions(f).recombine(), f);
  }
}

TEST(RatFun, DerivativeQuotientRule) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const RatFun f = testing::random_ratfun(rng, 6);
    const RatFun g = testing::random_ratfun(rng, 6);
    EXPECT_EQ(rf_deriv(f * g), rf_deriv(f) * g + f * rf_deriv(g));
    EXPECT_EQ(rf_deriv(f + g), rf_deriv(f) + rf_deriv(g));
  }
}

TEST(RatFun, DerivativeAtPoint) {
  // d^3/dx^3 [5x/(x+i)^2] at i = 15/8
  const RatFun f(XiPoly::xi() * ScalarPoly(5), 0, 2);
  EXPECT_EQ(rf_deriv_at(f, 3, kI), ScalarPoly(q(15, 8)));
  EXPECT_THROW(rf_deriv_at(RatFun(XiPoly(ScalarPoly(1)), 1, 0), 0, kI), ArithmeticError);
}

TEST(RatFun, PolynomialPartIsNotIntegrable) {
  EXPECT_THROW(rf_contour_plus_over_pi(RatFun(XiPoly::xi() * XiPoly::xi(), 1, 1)), IntegrationError);
  // x/(1+x^2): residue 1/2 at +i
  EXPECT_EQ(rf_contour_plus_over_pi(RatFun(XiPoly::xi(), 1, 1)), ScalarPoly(kI));
}

TEST(RatFun, InverseOfNormPower) {
  const RatFun f = RatFun::norm_power(-3) * ScalarPoly(q(2, 5));
  ASSERT_TRUE(f.inverse().has_value());
  EXPECT_EQ(*f.inverse() * f, RatFun(1));
  EXPECT_FALSE(RatFun(XiPoly::xi() + XiPoly(ScalarPoly(2))).inverse().has_value());
}

TEST(RatFunProperty, CauchyConsistencyOnRandomInputs) {
  const auto start = std::chrono::steady_clock::now();
  const auto r = testing::check_cauchy(600, 2024, 20);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_TRUE(r.ok()) << r.describe();
  EXPECT_GE(r.checked, 1200u);
  EXPECT_LT(secs, 10.0);
}

TEST(RatFunProperty, ProjectionAlgebraOnRandomInputs) {
  const auto r = testing::check_projection(300, 99, 20);
  EXPECT_TRUE(r.ok()) << r.describe();
}

TEST(RatFunProperty, PiPrimeSeesOnlyThePlusPart) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    const RatFun f = testing::random_ratfun(rng, 12);
    EXPECT_EQ(rf_pi_prime(f), rf_pi_prime(rf_pi_plus(f)));
    EXPECT_EQ(rf_contour_plus_over_pi(f), rf_pi_prime(f) * GaussianRational(2));
  }
}

}  // namespace
}  // namespace wres
