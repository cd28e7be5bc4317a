#pragma once

// Componentwise bihamiltonian pairs for the two-component systems over Z₂^ε,
// checked by applying each stated operator matrix to the variational
// derivatives of its Hamiltonian and comparing with the flow.

#include "fvir/operators.hpp"
#include "fvir/report.hpp"

#include <array>
#include <string>
#include <vector>

namespace fvir {

enum class PairSystem { KdV, CH, HS };

std::string to_string(PairSystem s);

/// 2×2 matrix of scalar operators acting on (δH/δp, δH/δq) (or (δH/δv, δH/δw)
/// when the moment equals the velocity).
using OperatorMatrix = std::array<std::array<DiffOperator, 2>, 2>;

/// One Hamiltonian presentation m_t = P δH/δm.
struct HamiltonianPresentation {
  std::string label;
  OperatorMatrix op;
  std::string density;  // textbook notation in v, w, p, q
};

struct ExamplePairCase {
  PairSystem system = PairSystem::KdV;
  Rational eps = 0;
  /// Inertia operator Λ with p = Λv, q = Λw.
  DiffOperator lambda;
  /// Componentwise equations in textbook notation; each contains exactly one
  /// time derivative, with coefficient 1.
  std::array<std::string, 2> equations;
  std::vector<HamiltonianPresentation> presentations;
};

/// Two transcriptions of the published presentations. AsPrinted keeps three
/// known misprints: the CH second Hamiltonians carry quadratic terms in place
/// of the cubic α∘u³ contribution, and the second ε = 0 HS matrix repeats the
/// CH one (∂³ − ∂ instead of ∂³). Corrected derives those entries from the
/// general H₂ = ½tr(ζ∘u∘u_xx + α∘u³ − ½β∘u²∘u_xx) and J₁ = β∂³ − α∂.
enum class FixtureText { Corrected, AsPrinted };

/// The fixture for one system at one value of ε (ε = 0 uses the degenerate
/// trace variant).
ExamplePairCase example_pair_case(PairSystem system, const Rational& eps, FixtureText text = FixtureText::Corrected);

struct ExamplePairOptions {
  /// Multiplies the leading coefficient of every Hamiltonian density by 4/3
  /// (3 → 4 for the KdV cubic term). Negative control.
  bool perturb = false;
};

Report verify_example_pairs(const ExamplePairCase& c, const ExamplePairOptions& options = {});
Report verify_example_pairs(PairSystem system, const Rational& eps, const ExamplePairOptions& options = {});

}  // namespace fvir
