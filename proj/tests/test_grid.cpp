#include "fvir/grid.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace fvir {
namespace {

constexpr double kPi = std::numbers::pi;

GridField sine(std::size_t n, double length, int k) {
  GridField f(n, 1, length);
  for (std::size_t j = 0; j < n; ++j) f(j, 0) = std::sin(2 * kPi * k * f.x(j) / length);
  return f;
}

TEST(Grid, ValidatesShape) {
  EXPECT_THROW(GridField(8, 1, 1.0), std::invalid_argument);
  EXPECT_THROW(GridField(48, 1, 1.0), std::invalid_argument);
  EXPECT_THROW(GridField(16, 0, 1.0), std::invalid_argument);
  EXPECT_THROW(GridField(16, 1, 0.0), std::invalid_argument);
  GridField f(16, 2, 3.0);
  EXPECT_EQ(f.values.size(), 32u);
  EXPECT_DOUBLE_EQ(f.x(4), 0.75);
}

TEST(Grid, RoundTripIsExactToRoundoff) {
  std::mt19937 rng(1);
  std::normal_distribution<double> g;
  for (std::size_t dim : {1u, 2u, 3u}) {
    GridField f(128, dim, 7.0);
    for (auto& v : f.values) v = g(rng);
    Fourier ft(128, dim, 7.0);
    auto back = ft.inverse(ft.forward(f));
    double err = 0;
    for (std::size_t i = 0; i < f.values.size(); ++i) err = std::max(err, std::abs(back.values[i] - f.values[i]));
    EXPECT_LT(err, 1e-12 * f.max_abs());
  }
}

TEST(Grid, ComponentsTransformIndependently) {
  GridField f(32, 2, 2 * kPi);
  for (std::size_t j = 0; j < 32; ++j) {
    f(j, 0) = std::cos(f.x(j));
    f(j, 1) = 3.0;
  }
  Fourier ft(32, 2, 2 * kPi);
  auto s = ft.forward(f);
  EXPECT_NEAR(std::abs(s[1 * 2 + 0]), 16.0, 1e-12);
  EXPECT_NEAR(std::abs(s[1 * 2 + 1]), 0.0, 1e-12);
  EXPECT_NEAR(s[0 * 2 + 1].real(), 96.0, 1e-12);
  EXPECT_NEAR(std::abs(s[0 * 2 + 0]), 0.0, 1e-12);
}

TEST(Grid, SpectralDerivativeOfSine) {
  const double length = 3.0;
  auto f = sine(64, length, 1);
  const double k = 2 * kPi / length;
  auto d1 = spectral_derivative(f, 1), d2 = spectral_derivative(f, 2), d3 = spectral_derivative(f, 3);
  // roundoff in the highest retained mode is amplified by k_max^order
  const double k_max = 2 * kPi * 21 / length;
  auto tol = [&](int order) { return 64 * std::numeric_limits<double>::epsilon() * std::pow(k_max, order); };
  for (std::size_t j = 0; j < 64; ++j) {
    const double x = f.x(j);
    EXPECT_NEAR(d1(j, 0), k * std::cos(k * x), tol(1));
    EXPECT_NEAR(d2(j, 0), -k * k * std::sin(k * x), tol(2));
    EXPECT_NEAR(d3(j, 0), -k * k * k * std::cos(k * x), tol(3));
  }
  EXPECT_THROW(spectral_derivative(f, 4), std::invalid_argument);
}

TEST(Grid, DerivativeOfConstantVanishes) {
  GridField f(32, 2, 5.0);
  for (auto& v : f.values) v = 2.5;
  for (int order : {1, 2, 3}) EXPECT_LT(spectral_derivative(f, order).max_abs(), 1e-13);
}

TEST(Grid, OddDerivativesDropNyquist) {
  GridField f(16, 1, 2 * kPi);
  for (std::size_t j = 0; j < 16; ++j) f(j, 0) = (j % 2 ? -1.0 : 1.0);
  EXPECT_LT(spectral_derivative(f, 1).max_abs(), 1e-13);
  EXPECT_LT(spectral_derivative(f, 3).max_abs(), 1e-12);
  Fourier ft(16, 1, 2 * kPi);
  EXPECT_EQ(ft.derivative_symbol(8, 1), std::complex<double>(0, 0));
  EXPECT_NE(ft.derivative_symbol(8, 2), std::complex<double>(0, 0));
  EXPECT_TRUE(ft.retained(5));
  EXPECT_FALSE(ft.retained(6));
}

TEST(Grid, Finiteness) {
  GridField f(16, 1, 1.0);
  EXPECT_TRUE(f.all_finite());
  f(3, 0) = std::nan("");
  EXPECT_FALSE(f.all_finite());
}

}  // namespace
}  // namespace fvir
