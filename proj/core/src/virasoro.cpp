#include "fvir/virasoro.hpp"

namespace fvir {

std::optional<double> Functional::value_if_constant(double length) const {
  if (!density.is_zero() && (density.size() != 1 || !density.terms().begin()->first.empty())) return std::nullopt;
  return density.constant_term().get_d() * length + constant.get_d();
}

bool equivalent(const Functional& a, const Functional& b) {
  if (a.constant != b.constant) return false;
  DiffPoly diff = a.density - b.density;
  return diff.is_zero() || is_total_derivative(diff);
}

AlgDiffPoly bracket_X(const AlgDiffPoly& u, const AlgDiffPoly& v) {
  return u * total_x_derivative(v) - total_x_derivative(u) * v;
}

DiffPoly cocycle_integrand(const AlgDiffPoly& u, const AlgDiffPoly& v) {
  return (u * total_x_derivative(v, 3)).trace();
}

VirasoroElement bracket(const VirasoroElement& u, const VirasoroElement& v) {
  const auto& alg = u.field.algebra_ptr();
  return {bracket_X(u.field, v.field), CentralCharge{alg->zero(), u.field * total_x_derivative(v.field, 3)}};
}

Functional pairing(const DualElement& m, const VirasoroElement& u) {
  const auto& alg = m.moment.algebra_ptr();
  Functional f;
  f.density = (m.moment * u.field).trace();
  f.density += (m.cocentral * u.central.density).trace();
  f.constant = alg->trace(alg->multiply(m.cocentral, u.central.constant));
  return f;
}

AlgDiffPoly coadjoint_rhs(const AlgDiffPoly& m, const AlgDiffPoly& u, const ExactElement& zeta) {
  AlgDiffPoly ux = total_x_derivative(u);
  return Rational(2) * (m * ux) + total_x_derivative(m) * u + zeta * total_x_derivative(u, 3);
}

AlgDiffPoly poisson_apply_J2(const AlgDiffPoly& m, const ExactElement& zeta, const AlgDiffPoly& x) {
  return -(m * total_x_derivative(x) + total_x_derivative(m * x) + zeta * total_x_derivative(x, 3));
}

AlgDiffPoly poisson_apply_J1(const ExactElement& alpha, const ExactElement& beta, const AlgDiffPoly& x) {
  return beta * total_x_derivative(x, 3) - alpha * total_x_derivative(x);
}

}  // namespace fvir
