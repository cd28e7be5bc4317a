#include "fvir/virasoro.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <random>

namespace fvir {
namespace {

using Q = Rational;

struct Symbols {
  AlgDiffPoly u, v, w;
  explicit Symbols(const ExactAlgebraPtr& a)
      : u(AlgDiffPoly::symbol(a, field::kVelocity)),
        v(AlgDiffPoly::symbol(a, field::kV)),
        w(AlgDiffPoly::symbol(a, field::kW)) {}
};

TEST(Virasoro, BracketOverRIsVectorFieldCommutator) {
  auto r = test::share(builtin_R());
  Symbols s(r);
  auto expected = s.u * total_x_derivative(s.v) - total_x_derivative(s.u) * s.v;
  EXPECT_EQ(bracket_X(s.u, s.v), expected);
  EXPECT_TRUE(bracket_X(s.u, s.u).is_zero());
}

TEST(Virasoro, BracketJacobiAndLoopContrast) {
  for (const auto& alg : test::sample_algebras()) {
    Symbols s(alg);
    auto jac = bracket_X(s.u, bracket_X(s.v, s.w)) + bracket_X(s.v, bracket_X(s.w, s.u)) +
               bracket_X(s.w, bracket_X(s.u, s.v));
    EXPECT_TRUE(jac.is_zero()) << alg->name();
    EXPECT_EQ(bracket_X(s.u, s.v), -bracket_X(s.v, s.u));
    EXPECT_TRUE((s.u * s.v - s.v * s.u).is_zero());
    EXPECT_FALSE(bracket_X(s.u, s.v).is_zero());
  }
}

TEST(Virasoro, JacobiOnRandomPolynomialFields) {
  std::mt19937 rng(17);
  for (auto alg : {test::share(builtin_Z2(Q(2), 1)), test::share(builtin_Zl_top(3))}) {
    for (int t = 0; t < 5; ++t) {
      auto a = test::random_alg_diffpoly(rng, alg, field::kVelocity, 1, 2);
      auto b = test::random_alg_diffpoly(rng, alg, field::kVelocity, 1, 2);
      auto c = test::random_alg_diffpoly(rng, alg, field::kVelocity, 1, 1);
      auto jac = bracket_X(a, bracket_X(b, c)) + bracket_X(b, bracket_X(c, a)) + bracket_X(c, bracket_X(a, b));
      ASSERT_TRUE(jac.is_zero());
    }
  }
}

TEST(Virasoro, CocycleConditionsOnEveryAlgebra) {
  for (const auto& alg : test::sample_algebras()) {
    Symbols s(alg);
    EXPECT_TRUE(is_total_derivative(cocycle_integrand(s.u, s.v) + cocycle_integrand(s.v, s.u)));
    EXPECT_TRUE(is_total_derivative(cocycle_integrand(s.u, s.u)));
    auto cyc = cocycle_integrand(s.u, bracket_X(s.v, s.w)) + cocycle_integrand(s.v, bracket_X(s.w, s.u)) +
               cocycle_integrand(s.w, bracket_X(s.u, s.v));
    EXPECT_TRUE(is_total_derivative(cyc)) << alg->name();
    // Nontrivial: the integrand itself is not exact.
    EXPECT_FALSE(is_total_derivative(cocycle_integrand(s.u, s.v)));
  }
}

TEST(Virasoro, PairingOfConstants) {
  auto z1 = test::share(builtin_Z2(Q(1), 1));
  DualElement m{AlgDiffPoly::constant(z1, z1->basis(0)), z1->zero()};
  VirasoroElement u{AlgDiffPoly::constant(z1, z1->basis(0)), CentralCharge::of(z1, z1->zero())};
  auto val = pairing(m, u).value_if_constant(2 * std::numbers::pi);
  ASSERT_TRUE(val);
  EXPECT_DOUBLE_EQ(*val, 2 * std::numbers::pi);

  auto z2 = test::share(builtin_Z2(Q(1), 2));
  DualElement m2{AlgDiffPoly::constant(z2, z2->basis(0)), z2->zero()};
  VirasoroElement u2{AlgDiffPoly::constant(z2, z2->basis(1)), CentralCharge::of(z2, z2->zero())};
  EXPECT_DOUBLE_EQ(*pairing(m2, u2).value_if_constant(1.0), 1.0);

  // Central part contributes tr(ζ∘a).
  DualElement m3{AlgDiffPoly(z2), z2->basis(1)};
  VirasoroElement u3{AlgDiffPoly(z2), CentralCharge::of(z2, Q(3) * z2->basis(0))};
  EXPECT_EQ(pairing(m3, u3).constant, Q(3));
}

TEST(Virasoro, PairingIsBilinear) {
  auto alg = test::share(builtin_Z2(Q(-1), 1));
  Symbols s(alg);
  DualElement m{s.u, alg->unit()};
  VirasoroElement a{s.v, CentralCharge::of(alg, alg->basis(1))};
  VirasoroElement b{s.w, CentralCharge::of(alg, alg->unit())};
  VirasoroElement sum{s.v + Q(2) * s.w, CentralCharge::of(alg, alg->basis(1) + Q(2) * alg->unit())};
  auto lhs = pairing(m, sum);
  auto pa = pairing(m, a), pb = pairing(m, b);
  EXPECT_EQ(lhs.density, pa.density + Q(2) * pb.density);
  EXPECT_EQ(lhs.constant, pa.constant + Q(2) * pb.constant);
}

TEST(Virasoro, CoadjointExamples) {
  auto r = test::share(builtin_R());
  Symbols s(r);
  auto ux = total_x_derivative(s.u);
  EXPECT_EQ(coadjoint_rhs(s.u, s.u, r->unit()), Q(3) * s.u * ux + total_x_derivative(s.u, 3));

  auto z = test::share(builtin_Z2(Q(2), 1));
  Symbols t(z);
  auto c = AlgDiffPoly::constant(z, Q(5) * z->unit());
  EXPECT_EQ(coadjoint_rhs(t.v, c, z->basis(1)), total_x_derivative(t.v) * c);
}

TEST(Virasoro, CoadjointDuality) {
  // tr∫ ad*_u(m)∘v = −⟨m̂, [û, v̂]⟩ modulo total derivatives.
  for (const auto& alg : test::sample_algebras()) {
    auto m = AlgDiffPoly::symbol(alg, field::kMoment);
    Symbols s(alg);
    ExactElement zeta = alg->unit() + alg->basis(alg->dim() - 1);
    DualElement mh{m, zeta};
    VirasoroElement uh{s.u, CentralCharge::of(alg, alg->zero())}, vh{s.v, CentralCharge::of(alg, alg->zero())};
    Functional lhs{(coadjoint_rhs(m, s.u, zeta) * s.v).trace(), Q(0)};
    auto br = pairing(mh, bracket(uh, vh));
    Functional rhs{-br.density, -br.constant};
    EXPECT_TRUE(equivalent(lhs, rhs)) << alg->name();
    Functional wrong{(coadjoint_rhs(m, s.u, alg->zero()) * s.v).trace(), Q(0)};
    EXPECT_FALSE(equivalent(wrong, rhs));
  }
}

TEST(Virasoro, PoissonOperators) {
  std::mt19937 rng(23);
  for (const auto& alg : test::sample_algebras()) {
    auto alpha = alg->unit() + Q(2) * alg->basis(alg->dim() - 1);
    auto beta = Q(3) * alg->unit() - alg->basis(alg->dim() - 1);
    auto frozen = AlgDiffPoly::constant(alg, Q(1, 2) * alpha);
    auto x = test::random_alg_diffpoly(rng, alg, field::kVelocity, 2, 2);
    EXPECT_EQ(poisson_apply_J2(frozen, -beta, x), poisson_apply_J1(alpha, beta, x));
    EXPECT_TRUE(poisson_apply_J1(alg->zero(), alg->zero(), x).is_zero());
    Symbols s(alg);
    auto m = AlgDiffPoly::symbol(alg, field::kMoment);
    EXPECT_EQ(poisson_apply_J2(m, beta, s.u), -coadjoint_rhs(m, s.u, beta));
    auto y = test::random_alg_diffpoly(rng, alg, field::kVelocity, 2, 2);
    EXPECT_EQ(poisson_apply_J2(m, beta, x + Q(3) * y), poisson_apply_J2(m, beta, x) + Q(3) * poisson_apply_J2(m, beta, y));
  }
}

}  // namespace
}  // namespace fvir
