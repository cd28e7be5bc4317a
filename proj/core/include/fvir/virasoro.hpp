#pragma once

// Symbolic structure of the Frobenius–Virasoro algebra: algebra-valued vector
// fields u∂ with bracket [u∂, v∂] = (u∘v_x − u_x∘v)∂, centrally extended by
// the algebra-valued Gelfand–Fuchs cocycle ∫ u∘v_xxx dx, and its regular dual
// of pairs (m dx², ζ).

#include "fvir/diffpoly.hpp"

#include <optional>

namespace fvir {

/// An algebra-valued central coordinate a + ∫ density dx. Plain central
/// elements have a zero density; brackets produce the integral part.
struct CentralCharge {
  ExactElement constant;
  AlgDiffPoly density;

  static CentralCharge of(const ExactAlgebraPtr& algebra, const ExactElement& a) {
    return {a, AlgDiffPoly(algebra)};
  }
};

/// (u∂, a)
struct VirasoroElement {
  AlgDiffPoly field;
  CentralCharge central;
};

/// (m dx², ζ)
struct DualElement {
  AlgDiffPoly moment;
  ExactElement cocentral;
};

/// A real-valued functional ∫ density dx + constant.
struct Functional {
  DiffPoly density;
  Rational constant;

  /// Value on a circle of length L when the density carries no jets.
  std::optional<double> value_if_constant(double length) const;
};

/// True when both functionals agree on every field configuration: equal
/// constants and densities differing by a total derivative.
bool equivalent(const Functional& a, const Functional& b);

/// u∘v_x − u_x∘v
AlgDiffPoly bracket_X(const AlgDiffPoly& u, const AlgDiffPoly& v);

/// Integrand tr(u∘v_xxx) of the traced cocycle.
DiffPoly cocycle_integrand(const AlgDiffPoly& u, const AlgDiffPoly& v);

/// [(u∂,a),(v∂,b)] = ([u∂,v∂], ω(u∂,v∂)).
VirasoroElement bracket(const VirasoroElement& u, const VirasoroElement& v);

/// ⟨(m,ζ),(u,a)⟩ = tr∫ m∘u dx + tr(ζ∘a).
Functional pairing(const DualElement& m, const VirasoroElement& u);

/// 2m∘u_x + m_x∘u + ζ∘u_xxx (the moment part of ad*_û m̂).
AlgDiffPoly coadjoint_rhs(const AlgDiffPoly& m, const AlgDiffPoly& u, const ExactElement& zeta);

/// J₂X = −(m∘X_x + (m∘X)_x + ζ∘X_xxx)
AlgDiffPoly poisson_apply_J2(const AlgDiffPoly& m, const ExactElement& zeta, const AlgDiffPoly& x);

/// J₁X = β∘X_xxx − α∘X_x  (= −∂Λ X for Λ = α − β∂²)
AlgDiffPoly poisson_apply_J1(const ExactElement& alpha, const ExactElement& beta, const AlgDiffPoly& x);

}  // namespace fvir
