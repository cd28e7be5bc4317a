#include "fvir/euler.hpp"

#include <cmath>

namespace fvir {

int InertiaSpec::order() const {
  for (int k = int(alpha.size()) - 1; k >= 0; --k)
    for (std::size_t i = 0; i < alpha[k].size(); ++i)
      if (alpha[k][i] != 0) return k;
  return -1;
}

AlgDiffPoly InertiaSpec::apply(const AlgDiffPoly& u) const {
  AlgDiffPoly out(u.algebra_ptr());
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    AlgDiffPoly term = alpha[k] * total_x_derivative(u, unsigned(2 * k));
    if (k % 2) term *= Rational(-1);
    out += term;
  }
  return out;
}

std::vector<double> InertiaSpec::symbol(double kappa) const {
  std::vector<double> s(alpha.empty() ? 0 : alpha[0].size(), 0.0);
  const double k2 = kappa * kappa;
  double power = 1.0;
  for (const auto& a : alpha) {
    for (std::size_t i = 0; i < a.size(); ++i) s[i] += a[i].get_d() * power;
    power *= k2;
  }
  return s;
}

ExactElement InertiaSpec::coefficient(std::size_t k, std::size_t dim) const {
  return k < alpha.size() ? alpha[k] : ExactElement::zero(dim);
}

std::string to_string(EquationKind k) {
  switch (k) {
    case EquationKind::FKdV: return "FKdV";
    case EquationKind::FCH: return "FCH";
    case EquationKind::FHS: return "FHS";
    case EquationKind::General: return "General";
  }
  return "?";
}

namespace {

bool is_zero(const ExactElement& a) { return a.is_zero(); }

EquationKind classify(const ExactAlgebra& alg, const InertiaSpec& in, const ExactElement& zeta) {
  const int n = in.order();
  if (n == 0 && alg.is_invertible(in.alpha[0]) && !is_zero(zeta)) return EquationKind::FKdV;
  if (n == 1 && !is_zero(in.alpha[1])) return is_zero(in.alpha[0]) ? EquationKind::FHS : EquationKind::FCH;
  return EquationKind::General;
}

}  // namespace

EulerEquation build_euler_equation(ExactAlgebraPtr algebra, InertiaSpec inertia, ExactElement zeta) {
  algebra->check(zeta);
  for (const auto& a : inertia.alpha) algebra->check(a);
  const int n = inertia.order();
  if (n < 0) throw ZeroInertia("inertia operator has no nonzero coefficient");
  inertia.alpha.resize(std::size_t(n) + 1);

  EulerEquation eq;
  eq.algebra = algebra;
  eq.kind = classify(*algebra, inertia, zeta);
  eq.inertia = std::move(inertia);
  eq.zeta = std::move(zeta);

  auto u = AlgDiffPoly::symbol(algebra, field::kVelocity);
  auto m = AlgDiffPoly::symbol(algebra, field::kMoment);
  eq.m_of_u = eq.inertia.apply(u);
  eq.transport = coadjoint_rhs(m, u, eq.zeta);
  eq.rhs = -coadjoint_rhs(eq.m_of_u, u, eq.zeta);
  return eq;
}

DiffPoly hamiltonian_H1(const EulerEquation& eq) {
  auto u = AlgDiffPoly::symbol(eq.algebra, field::kVelocity);
  return Rational(1, 2) * (eq.m_of_u * u).trace();
}

DiffPoly hamiltonian_H2(const EulerEquation& eq) {
  if (eq.order() >= 2) throw Unsupported("H2 is only defined for inertia operators of order n <= 1");
  const std::size_t l = eq.algebra->dim();
  const ExactElement alpha = eq.inertia.coefficient(0, l);
  const ExactElement beta = eq.inertia.coefficient(1, l);
  auto u = AlgDiffPoly::symbol(eq.algebra, field::kVelocity);
  auto uxx = total_x_derivative(u, 2);
  auto inner = eq.zeta * (u * uxx) + alpha * (u * u * u) - Rational(1, 2) * (beta * (u * u * uxx));
  return Rational(1, 2) * inner.trace();
}

std::vector<ConservedFunctional> conserved_functionals(const EulerEquation& eq, const std::vector<TraceChoice>& traces) {
  std::vector<ConservedFunctional> out;
  for (const auto& t : traces) {
    auto alg = std::make_shared<const ExactAlgebra>(eq.algebra->with_trace(t.trace, eq.algebra->name()));
    EulerEquation local = eq;
    local.algebra = alg;
    auto rebuild = [&](const AlgDiffPoly& p) { return AlgDiffPoly(alg, p.components()); };
    local.m_of_u = rebuild(eq.m_of_u);
    ConservedFunctional f{t.name, hamiltonian_H1(local), std::nullopt};
    if (eq.order() <= 1) f.h2 = hamiltonian_H2(local);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<TraceChoice> default_traces(const ExactAlgebra& algebra, const std::optional<Rational>& z2_eps) {
  if (z2_eps && algebra.dim() == 2)
    return {{"tr1", z2_trace_vector(*z2_eps, 1)}, {"tr2", z2_trace_vector(*z2_eps, 2)}};
  return {{"tr", algebra.trace_vector()}};
}

Report rhs_is_hamiltonian_J2(const EulerEquation& eq) { return rhs_is_hamiltonian_J2(eq, eq.rhs); }

Report rhs_is_hamiltonian_J2(const EulerEquation& eq, const AlgDiffPoly& candidate_rhs) {
  const Naming names = default_naming(eq.algebra->dim());
  auto u = AlgDiffPoly::symbol(eq.algebra, field::kVelocity);
  Report r{"single Hamiltonian form [" + eq.algebra->name() + ", n=" + std::to_string(eq.order()) + "]", {}};
  r.expect_zero("δH1/δu = Λ(u)", alg_variational_derivative(hamiltonian_H1(eq), eq.algebra) - eq.m_of_u, names);
  r.expect_zero("J2 δH1/δm = m_t", poisson_apply_J2(eq.m_of_u, eq.zeta, u) - candidate_rhs, names);
  return r;
}

std::vector<std::string> expand_lines(const EulerEquation& eq) {
  const std::size_t l = eq.algebra->dim();
  const Naming names = componentwise_naming(l);
  std::vector<std::string> lines;
  if (eq.kind == EquationKind::FKdV) {
    const ExactElement& alpha = eq.inertia.alpha[0];
    auto lhs = alpha * AlgDiffPoly::time_symbol(eq.algebra, field::kVelocity) - eq.rhs;
    for (const auto& c : lhs.components()) lines.push_back(to_string(c, names) + " = 0");
    return lines;
  }
  auto lhs = AlgDiffPoly::time_symbol(eq.algebra, field::kMoment) + eq.transport;
  for (const auto& c : lhs.components()) lines.push_back(to_string(c, names) + " = 0");
  for (std::size_t k = 0; k < l; ++k)
    lines.push_back(names(field::kMoment, std::uint8_t(k)) + " = " + to_string(eq.m_of_u[k], names));
  return lines;
}

}  // namespace fvir
