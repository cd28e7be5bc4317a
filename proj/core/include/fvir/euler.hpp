#pragma once

// Euler equations m_t = −(2m∘u_x + m_x∘u + ζ∘u_xxx) on the dual of the
// Frobenius–Virasoro algebra for inertia operators
//   Λ(u) = α₀∘u + Σ_{k=1..n} (−1)ᵏ α_k∘u^(2k).

#include "fvir/report.hpp"
#include "fvir/virasoro.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fvir {

class ZeroInertia : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Unsupported : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// α₀, α₁, …, α_n. Trailing zero coefficients are dropped by the builder.
struct InertiaSpec {
  std::vector<ExactElement> alpha;

  /// (α, β) ↦ Λ = α − β∂²
  static InertiaSpec from_alpha_beta(ExactElement alpha, ExactElement beta) {
    return {{std::move(alpha), std::move(beta)}};
  }
  /// Highest index with a nonzero coefficient, −1 if none.
  int order() const;
  /// Λ(u) applied to an algebra-valued polynomial.
  AlgDiffPoly apply(const AlgDiffPoly& u) const;
  /// Fourier symbol S(κ) = α₀ + Σ α_k κ^{2k}, as double coordinates.
  std::vector<double> symbol(double kappa) const;
  /// α₀ and α₁ (zero when absent).
  ExactElement coefficient(std::size_t k, std::size_t dim) const;
};

enum class EquationKind { FKdV, FCH, FHS, General };

std::string to_string(EquationKind k);

struct EulerEquation {
  ExactAlgebraPtr algebra;
  InertiaSpec inertia;
  ExactElement zeta;
  EquationKind kind = EquationKind::General;
  /// Λ(u)
  AlgDiffPoly m_of_u;
  /// −(2m∘u_x + m_x∘u + ζ∘u_xxx) with m = Λ(u)
  AlgDiffPoly rhs;
  /// 2m∘u_x + m_x∘u + ζ∘u_xxx in the symbols m and u
  AlgDiffPoly transport;

  /// n = inertia.order()
  int order() const { return inertia.order(); }
};

/// Throws ZeroInertia when every coefficient vanishes and DimensionMismatch
/// for coefficients of the wrong size.
EulerEquation build_euler_equation(ExactAlgebraPtr algebra, InertiaSpec inertia, ExactElement zeta);

/// ½tr(m∘u) in u.
DiffPoly hamiltonian_H1(const EulerEquation& eq);
/// ½tr(ζ∘u∘u_xx + α∘u³ − ½β∘u²∘u_xx); throws Unsupported when n ≥ 2.
DiffPoly hamiltonian_H2(const EulerEquation& eq);

struct TraceChoice {
  std::string name;
  std::vector<Rational> trace;
};

struct ConservedFunctional {
  std::string trace_name;
  DiffPoly h1;
  std::optional<DiffPoly> h2;
};

/// H₁ (and H₂ when n ≤ 1) under every listed trace. Throws DegenerateTrace
/// for a trace whose Gram matrix is singular.
std::vector<ConservedFunctional> conserved_functionals(const EulerEquation& eq, const std::vector<TraceChoice>& traces);

/// The basic traces of the preset algebra, or the algebra's own trace.
std::vector<TraceChoice> default_traces(const ExactAlgebra& algebra, const std::optional<Rational>& z2_eps);

/// δH₁/δu = Λ(u) and J₂ δH₁/δm = J₂ u = candidate.
Report rhs_is_hamiltonian_J2(const EulerEquation& eq);
Report rhs_is_hamiltonian_J2(const EulerEquation& eq, const AlgDiffPoly& candidate_rhs);

/// Canonical componentwise text of the equation, one line per component
/// followed by the inertia relations. FKdV prints α∘u_t + 3α∘u∘u_x + ζ∘u_xxx;
/// the other kinds print m_t + 2m∘u_x + m_x∘u + ζ∘u_xxx and "p = Λ(v)" lines.
std::vector<std::string> expand_lines(const EulerEquation& eq);

}  // namespace fvir
