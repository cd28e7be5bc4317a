#pragma once

// Exact symbolic verification suites. Every function returns a Report; a
// failed identity carries its canonical residual instead of throwing.

#include "fvir/report.hpp"
#include "fvir/virasoro.hpp"

namespace fvir {

/// Commutativity, associativity and unit residuals recomputed exactly, the
/// Frobenius identity g(a∘b,c) = g(a,b∘c) on basis triples and
/// gram·gram⁻¹ = 1.
Report verify_algebra_axioms(const ExactAlgebraPtr& algebra);

/// The traced Gelfand–Fuchs integrand tr(u∘v_xxx) is antisymmetric and
/// satisfies the cyclic cocycle identity modulo total derivatives.
Report verify_cocycle(const ExactAlgebraPtr& algebra);

/// Antisymmetry and Jacobi identity of bracket_X, the contrast with the
/// (abelian) loop algebra, and the duality between the coadjoint action and
/// the bracket of the centrally extended algebra.
Report verify_bracket(const ExactAlgebraPtr& algebra);

/// Scale applied to the ζ and α terms of H₂; anything other than 1 is a
/// deliberate perturbation used as a negative control.
struct BihamiltonianOptions {
  Rational h2_scale = 1;
};

/// For m = α∘u − β∘u_xx, H₁ = ½tr∫m∘u and
/// H₂ = ½tr∫(ζ∘u∘u_xx + α∘u³ − ½β∘u²∘u_xx), checks exactly that
///   (a) δH₁/δu = Λ(u)
///   (b) δH₂/δu = ζ∘u_xx + 3/2 α∘u² − ½β∘u_x² − β∘u∘u_xx
///   (c) −∂(δH₂/δu) = −(2m∘u_x + m_x∘u + ζ∘u_xxx)       [J₁ δH₂/δm]
///   (d) J₂ u       = −(2m∘u_x + m_x∘u + ζ∘u_xxx)       [J₂ δH₁/δm]
///   (e) J₂ at the freezing point (α/2, −β) equals J₁.
Report verify_bihamiltonian(const ExactAlgebraPtr& algebra, const ExactElement& alpha, const ExactElement& beta,
                            const ExactElement& zeta, const BihamiltonianOptions& options = {});

}  // namespace fvir
