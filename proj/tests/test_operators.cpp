#include "fvir/operators.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

namespace fvir {
namespace {

using Q = Rational;
constexpr auto kU = field::kVelocity;

DiffPoly u(std::uint8_t c, std::uint8_t o = 0) { return DiffPoly::variable(kU, c, o); }

TEST(DiffOperator, CompositionObeysLeibniz) {
  auto dv = DiffOperator::d(1) * DiffOperator::multiply(u(0));
  EXPECT_EQ(dv, DiffOperator::multiply(u(0)) * DiffOperator::d(1) + DiffOperator::multiply(u(0, 1)));
  auto d3 = DiffOperator::d(1) * DiffOperator::d(2);
  EXPECT_EQ(d3, DiffOperator::d(3));
  EXPECT_EQ(d3.order(), 3);
  EXPECT_TRUE(d3.has_constant_coefficients());
  EXPECT_FALSE(dv.has_constant_coefficients());
}

TEST(DiffOperator, ApplyMatchesCompositionOnRandomInputs) {
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    auto a = test::random_diffpoly(rng, kU, 2, 2, 2, 2), b = test::random_diffpoly(rng, kU, 2, 2, 2, 2);
    auto f = test::random_diffpoly(rng, kU, 2, 2, 2, 3);
    DiffOperator pa = DiffOperator::multiply(a) * DiffOperator::d(2) + DiffOperator::d(1);
    DiffOperator pb = DiffOperator::d(1) * DiffOperator::multiply(b) + DiffOperator::identity();
    ASSERT_EQ((pa * pb).apply(f), pa.apply(pb.apply(f)));
  }
}

TEST(DiffOperator, KdVHamiltonianOperatorAppliedToGradient) {
  // (∂³ + v∂ + ∂v)(1) = v_x
  auto j0 = DiffOperator::d(3) + DiffOperator::multiply(u(0)) * DiffOperator::d(1) +
            DiffOperator::d(1) * DiffOperator::multiply(u(0));
  EXPECT_EQ(j0.apply(DiffPoly(1)), u(0, 1));
  EXPECT_EQ(j0.apply(u(0)), u(0, 3) + Q(3) * u(0) * u(0, 1));
}

TEST(DiffOperator, RightDivisionReconstructs) {
  auto lambda = DiffOperator::identity() - DiffOperator::d(2);
  std::mt19937 rng(8);
  for (int t = 0; t < 30; ++t) {
    auto a = test::random_diffpoly(rng, kU, 2, 2, 2, 2);
    DiffOperator p = DiffOperator::multiply(a) * DiffOperator::d(3) + DiffOperator::d(1) * DiffOperator::multiply(a);
    auto [q, r] = right_divide(p, lambda);
    ASSERT_EQ(q * lambda + r, p);
    ASSERT_LT(r.order(), 2);
  }
  EXPECT_THROW(right_divide(DiffOperator::d(1), DiffOperator()), std::invalid_argument);
  EXPECT_THROW(right_divide(DiffOperator::d(1), DiffOperator::multiply(u(0))), std::invalid_argument);
}

TEST(DiffOperator, ConstantCoefficientSolve) {
  std::mt19937 rng(13);
  auto helmholtz = DiffOperator::identity() - DiffOperator::d(2);
  auto hs = -DiffOperator::d(2);
  for (int t = 0; t < 30; ++t) {
    auto g = test::random_diffpoly(rng, kU, 2, 2, 3);
    g -= DiffPoly(g.constant_term());
    auto s1 = solve_constant_coefficient(helmholtz, helmholtz.apply(g));
    ASSERT_TRUE(s1);
    ASSERT_EQ(*s1, g);
    auto s2 = solve_constant_coefficient(hs, hs.apply(g));
    ASSERT_TRUE(s2);
    ASSERT_EQ(*s2, g);
  }
  EXPECT_FALSE(solve_constant_coefficient(DiffOperator::d(1), u(0)));
  EXPECT_FALSE(solve_constant_coefficient(DiffOperator::d(2), u(0) * u(0, 2)));
}

}  // namespace
}  // namespace fvir
