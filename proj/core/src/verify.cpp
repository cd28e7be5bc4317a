#include "fvir/verify.hpp"

namespace fvir {

namespace {

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
}

ExactElement all_ones(const ExactAlgebra& alg) {
  ExactElement z = alg.zero();
  for (std::size_t k = 0; k < alg.dim(); ++k) z[k] = 1;
  return z;
}

}  // namespace

Report verify_algebra_axioms(const ExactAlgebraPtr& algebra) {
  const ExactAlgebra& a = *algebra;
  const std::size_t l = a.dim();
  Report r{"algebra axioms [" + a.name() + "]", {}};

  std::string bad;
  for (std::size_t i = 0; i < l && bad.empty(); ++i)
    for (std::size_t j = 0; j < l && bad.empty(); ++j)
      if (a.multiply(a.basis(i), a.basis(j)) != a.multiply(a.basis(j), a.basis(i))) bad = triple(i, j, 0);
  r.add("commutativity", bad.empty(), bad);

  bad.clear();
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j)
      for (std::size_t k = 0; k < l; ++k) {
        auto left = a.multiply(a.multiply(a.basis(i), a.basis(j)), a.basis(k));
        auto right = a.multiply(a.basis(i), a.multiply(a.basis(j), a.basis(k)));
        if (left != right && bad.empty()) bad = triple(i, j, k);
      }
  r.add("associativity", bad.empty(), bad);

  bad.clear();
  for (std::size_t i = 0; i < l; ++i)
    if (a.multiply(a.unit(), a.basis(i)) != a.basis(i) && bad.empty()) bad = "e" + std::to_string(i + 1);
  r.add("unit", bad.empty(), bad);

  bad.clear();
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j)
      for (std::size_t k = 0; k < l; ++k) {
        Rational lhs = a.pairing_form(a.multiply(a.basis(i), a.basis(j)), a.basis(k));
        Rational rhs = a.pairing_form(a.basis(i), a.multiply(a.basis(j), a.basis(k)));
        if (lhs != rhs && bad.empty()) bad = triple(i, j, k);
      }
  r.add("frobenius invariance g(a∘b,c)=g(a,b∘c)", bad.empty(), bad);

  r.add("nondegenerate gram", determinant(a.gram()) != 0, "det(gram) = 0");
  r.add("gram * gram_inverse = 1", a.gram() * a.gram_inverse() == DenseMatrix<Rational>::identity(l), "not identity");
  return r;
}

Report verify_cocycle(const ExactAlgebraPtr& algebra) {
  const Naming names = default_naming(algebra->dim());
  auto u = AlgDiffPoly::symbol(algebra, field::kVelocity);
  auto v = AlgDiffPoly::symbol(algebra, field::kV);
  auto w = AlgDiffPoly::symbol(algebra, field::kW);
  Report r{"cocycle [" + algebra->name() + "]", {}};
  r.expect_total_derivative("ω(u,v) + ω(v,u) ≡ 0", cocycle_integrand(u, v) + cocycle_integrand(v, u), names);
  r.expect_total_derivative("ω(u,u) ≡ 0", cocycle_integrand(u, u), names);
  r.expect_total_derivative(
      "ω(u,[v,w]) + c.p. ≡ 0",
      cocycle_integrand(u, bracket_X(v, w)) + cocycle_integrand(v, bracket_X(w, u)) + cocycle_integrand(w, bracket_X(u, v)),
      names);
  return r;
}

Report verify_bracket(const ExactAlgebraPtr& algebra) {
  const Naming names = default_naming(algebra->dim());
  auto u = AlgDiffPoly::symbol(algebra, field::kVelocity);
  auto v = AlgDiffPoly::symbol(algebra, field::kV);
  auto w = AlgDiffPoly::symbol(algebra, field::kW);
  auto m = AlgDiffPoly::symbol(algebra, field::kMoment);
  Report r{"bracket [" + algebra->name() + "]", {}};

  r.expect_zero("[u,v] + [v,u] = 0", bracket_X(u, v) + bracket_X(v, u), names);
  r.expect_zero("[u,u] = 0", bracket_X(u, u), names);
  r.expect_zero("[u,[v,w]] + c.p. = 0",
                bracket_X(u, bracket_X(v, w)) + bracket_X(v, bracket_X(w, u)) + bracket_X(w, bracket_X(u, v)), names);
  r.expect_zero("pointwise commutator u∘v − v∘u = 0", u * v - v * u, names);
  r.add("bracket_X(u,v) != 0 (not a loop algebra)", !bracket_X(u, v).is_zero(), "bracket vanished");

  // ⟨ad*_û m̂, v̂⟩ = −⟨m̂, [û, v̂]⟩ modulo total derivatives
  const ExactElement zeta = all_ones(*algebra);
  const ExactElement a = algebra->basis(0);
  const ExactElement b = all_ones(*algebra);
  VirasoroElement uhat{u, CentralCharge::of(algebra, a)};
  VirasoroElement vhat{v, CentralCharge::of(algebra, b)};
  DualElement mhat{m, zeta};
  Functional lhs{(coadjoint_rhs(m, u, zeta) * v).trace(), Rational(0)};
  Functional rhs = pairing(mhat, bracket(uhat, vhat));
  rhs.density *= Rational(-1);
  rhs.constant *= Rational(-1);
  r.add("coadjoint duality ⟨ad*_û m̂, v̂⟩ = −⟨m̂,[û,v̂]⟩", equivalent(lhs, rhs),
        to_string(lhs.density - rhs.density, names));
  return r;
}

Report verify_bihamiltonian(const ExactAlgebraPtr& algebra, const ExactElement& alpha, const ExactElement& beta,
                            const ExactElement& zeta, const BihamiltonianOptions& options) {
  const Naming names = default_naming(algebra->dim());
  const ExactAlgebra& alg = *algebra;
  auto u = AlgDiffPoly::symbol(algebra, field::kVelocity);
  auto ux = total_x_derivative(u);
  auto uxx = total_x_derivative(u, 2);
  auto m = alpha * u - beta * uxx;

  DiffPoly h1 = Rational(1, 2) * (m * u).trace();
  DiffPoly h2 = Rational(1, 2) * (options.h2_scale * (zeta * (u * uxx)) + options.h2_scale * (alpha * (u * u * u)) -
                                  Rational(1, 2) * (beta * (u * u * uxx)))
                                     .trace();

  auto dh1 = alg_variational_derivative(h1, algebra);
  auto dh2 = alg_variational_derivative(h2, algebra);
  auto expected_dh2 = zeta * uxx + Rational(3, 2) * (alpha * (u * u)) - Rational(1, 2) * (beta * (ux * ux)) -
                      beta * (u * uxx);
  auto flow = -coadjoint_rhs(m, u, zeta);

  Report r{"bihamiltonian [" + alg.name() + "; α=" + to_string(alpha) + ", β=" + to_string(beta) +
               ", ζ=" + to_string(zeta) + "]",
           {}};
  r.expect_zero("(a) δH1/δu = Λ(u)", dh1 - m, names);
  r.expect_zero("(b) δH2/δu = ζ∘u_xx + 3/2α∘u² − ½β∘u_x² − β∘u∘u_xx", dh2 - expected_dh2, names);
  r.expect_zero("(c) J1 δH2/δm = −∂ δH2/δu = m_t", -total_x_derivative(dh2) - flow, names);
  r.expect_zero("(d) J2 δH1/δm = J2 u = m_t", poisson_apply_J2(m, zeta, u) - flow, names);

  auto x = AlgDiffPoly::symbol(algebra, field::kV);
  auto frozen = AlgDiffPoly::constant(algebra, Rational(1, 2) * alpha);
  r.expect_zero("(e) J2 at freezing point (α/2, −β) = J1",
                poisson_apply_J2(frozen, -beta, x) - poisson_apply_J1(alpha, beta, x), names);
  return r;
}

}  // namespace fvir
