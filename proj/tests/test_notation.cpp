#include "fvir/notation.hpp"

#include <gtest/gtest.h>

namespace fvir {
namespace {

using Q = Rational;

DiffPoly v(std::uint8_t order = 0) { return DiffPoly::variable(field::kVelocity, 0, order); }
DiffPoly w(std::uint8_t order = 0) { return DiffPoly::variable(field::kVelocity, 1, order); }

const SymbolTable& two() {
  static const SymbolTable s = componentwise_symbols(2);
  return s;
}

TEST(Notation, DensityWithPowersAndEpsilon) {
  auto p = parse_density("3v^2w+εw^3+2vw_xx", two(), Q(2));
  EXPECT_EQ(p, Q(3) * v() * v() * w() + Q(2) * w() * w() * w() + Q(2) * v() * w(2));
  EXPECT_EQ(parse_density("3v^2w+epsw^3+2vw_xx", two(), Q(2)), p);
}

TEST(Notation, HalfPrefixAndParentheses) {
  EXPECT_EQ(parse_density("1/2(v^2+εw^2)", two(), Q(-1)), Q(1, 2) * v() * v() - Q(1, 2) * w() * w());
  EXPECT_EQ(parse_density("ε(2qw_x+q_xw)", two(), Q(3)),
            Q(6) * DiffPoly::variable(field::kMoment, 1) * w(1) +
                Q(3) * DiffPoly::variable(field::kMoment, 1, 1) * w());
}

TEST(Notation, DerivativeOfProduct) {
  auto eq = parse_equation("w_t+3(vw)_x+w_xxx=0", two());
  DiffPoly wt = DiffPoly::jet(Jet{field::kVelocity, 1, 0, true});
  EXPECT_EQ(eq, wt + Q(3) * (v(1) * w() + v() * w(1)) + w(3));
  EXPECT_EQ(parse_equation("w_t+3(vw)_x+w_xxx", two()), eq);
}

TEST(Notation, EquationMovesRightHandSide) {
  auto eq = parse_equation("p = v-v_xx", two());
  EXPECT_EQ(eq, DiffPoly::variable(field::kMoment, 0) - v() + v(2));
}

TEST(Notation, ScalarSymbols) {
  auto s = componentwise_symbols(1);
  auto u = DiffPoly::variable(field::kVelocity, 0);
  EXPECT_EQ(parse_density("1/2(uu_xx+u^3)", s), Q(1, 2) * (u * DiffPoly::variable(field::kVelocity, 0, 2)) +
                                                     Q(1, 2) * u * u * u);
}

TEST(Notation, Errors) {
  EXPECT_THROW(parse_density("3z^2", two()), NotationError);
  EXPECT_THROW(parse_density("(v+w", two()), NotationError);
  EXPECT_THROW(parse_density("v_y", two()), NotationError);
  EXPECT_THROW(parse_equation("v=w=0", two()), NotationError);
  EXPECT_THROW(parse_density("", two()), NotationError);
}

}  // namespace
}  // namespace fvir
