#pragma once

// Exact differential polynomials in jet variables u_i^(n) and their
// algebra-valued counterparts. Functionals on the circle are represented by
// their densities; two densities define the same functional when their
// difference lies in the kernel of the Euler operator (and has no constant
// term), i.e. when it is a total x-derivative.

#include "fvir/algebra.hpp"
#include "fvir/rational.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace fvir {

/// Field identifiers. The moment m sorts before the velocity u so that the
/// printed componentwise equations read "p*v_x" rather than "v_x*p".
namespace field {
inline constexpr std::uint8_t kMoment = 0;
inline constexpr std::uint8_t kVelocity = 1;
inline constexpr std::uint8_t kV = 2;
inline constexpr std::uint8_t kW = 3;
}  // namespace field

/// One jet coordinate: component `comp` of field `field`, differentiated
/// `order` times in x and, if `time` is set, once in t.
struct Jet {
  std::uint8_t field = field::kVelocity;
  std::uint8_t comp = 0;
  std::uint8_t order = 0;
  bool time = false;

  friend auto operator<=>(const Jet&, const Jet&) = default;
};

/// Sorted multiset of jets.
using Monomial = std::vector<Jet>;

class DiffPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  DiffPoly() = default;
  DiffPoly(const Rational& c);  // NOLINT(google-explicit-constructor): constants embed implicitly
  DiffPoly(int c) : DiffPoly(Rational(c)) {}

  static DiffPoly jet(const Jet& j);
  static DiffPoly variable(std::uint8_t field, std::uint8_t comp, std::uint8_t order = 0);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds c·monomial; the monomial is sorted and like terms merged.
  void add_term(Monomial m, const Rational& c);

  /// Coefficient of the empty monomial.
  Rational constant_term() const;
  int max_order() const;
  int max_degree() const;
  /// Distinct (field, comp, time) triples occurring in the polynomial.
  std::set<std::tuple<std::uint8_t, std::uint8_t, bool>> variables() const;
  /// Homogeneous part of the given polynomial degree.
  DiffPoly homogeneous_part(int degree) const;

  DiffPoly& operator+=(const DiffPoly& o);
  DiffPoly& operator-=(const DiffPoly& o);
  DiffPoly& operator*=(const Rational& c);
  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
  friend DiffPoly operator-(DiffPoly a) { return a *= Rational(-1); }
  friend DiffPoly operator*(const Rational& c, DiffPoly a) { return a *= c; }
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  friend bool operator==(const DiffPoly&, const DiffPoly&) = default;

 private:
  TermMap terms_;
};

DiffPoly pow(const DiffPoly& p, unsigned n);

/// D = d/dx acting by the chain rule on every jet.
DiffPoly total_x_derivative(const DiffPoly& p);
DiffPoly total_x_derivative(const DiffPoly& p, unsigned times);

/// ∂p/∂j treating every jet as an independent variable.
DiffPoly partial_derivative(const DiffPoly& p, const Jet& j);

/// Variational derivative Σ_n (−D)^n ∂p/∂u^(n) with respect to one component
/// of one field (spatial jets only).
DiffPoly euler_operator(const DiffPoly& p, std::uint8_t field, std::uint8_t comp);

/// True iff p = D(q) for some differential polynomial q: every Euler
/// derivative vanishes and there is no constant term.
bool is_total_derivative(const DiffPoly& p);

/// Returns q with D(q) = p and no constant term (homotopy operator).
/// Throws std::domain_error when p is not a total derivative.
DiffPoly antiderivative(const DiffPoly& p);

/// Replaces every spatial jet of the listed (field, comp) by the matching
/// x-derivative of its replacement. Jets without a replacement are kept.
using Substitution = std::function<std::optional<DiffPoly>(std::uint8_t field, std::uint8_t comp)>;
DiffPoly substitute(const DiffPoly& p, const Substitution& replacement);

/// Numeric evaluation given the value of every jet.
double evaluate(const DiffPoly& p, const std::function<double(const Jet&)>& jet_value);

/// Maps (field, comp) to a printable symbol.
using Naming = std::function<std::string(std::uint8_t field, std::uint8_t comp)>;

/// u, m (dimension 1) or u1, u2, m1, … ; the auxiliary fields print as v, w.
Naming default_naming(std::size_t dim);
/// Componentwise names: dimension 1 u/m, dimension 2 v,w / p,q, else u1../m1...
Naming componentwise_naming(std::size_t dim);

/// Canonical text. Terms carrying a time derivative come first, then higher
/// polynomial degree, then lexicographic jet order.
std::string to_string(const DiffPoly& p, const Naming& naming);
std::string to_string(const DiffPoly& p);

using ExactAlgebraPtr = std::shared_ptr<const ExactAlgebra>;

/// Algebra-valued differential polynomial: one DiffPoly per basis coordinate.
class AlgDiffPoly {
 public:
  AlgDiffPoly() = default;
  explicit AlgDiffPoly(ExactAlgebraPtr algebra);
  AlgDiffPoly(ExactAlgebraPtr algebra, std::vector<DiffPoly> components);

  /// Σ_k u_k e_k for the given field.
  static AlgDiffPoly symbol(ExactAlgebraPtr algebra, std::uint8_t field);
  /// Same, with the time derivative flag set (u_t).
  static AlgDiffPoly time_symbol(ExactAlgebraPtr algebra, std::uint8_t field);
  static AlgDiffPoly constant(ExactAlgebraPtr algebra, const ExactElement& a);

  const ExactAlgebra& algebra() const { return *algebra_; }
  const ExactAlgebraPtr& algebra_ptr() const { return algebra_; }
  std::size_t dim() const { return components_.size(); }
  const DiffPoly& operator[](std::size_t k) const { return components_[k]; }
  DiffPoly& operator[](std::size_t k) { return components_[k]; }
  const std::vector<DiffPoly>& components() const { return components_; }

  bool is_zero() const;
  /// tr applied coordinatewise: Σ_k t_k p_k.
  DiffPoly trace() const;

  AlgDiffPoly& operator+=(const AlgDiffPoly& o);
  AlgDiffPoly& operator-=(const AlgDiffPoly& o);
  AlgDiffPoly& operator*=(const Rational& c);
  friend AlgDiffPoly operator+(AlgDiffPoly a, const AlgDiffPoly& b) { return a += b; }
  friend AlgDiffPoly operator-(AlgDiffPoly a, const AlgDiffPoly& b) { return a -= b; }
  friend AlgDiffPoly operator-(AlgDiffPoly a) { return a *= Rational(-1); }
  friend AlgDiffPoly operator*(const Rational& c, AlgDiffPoly a) { return a *= c; }
  /// Algebra product through the structure constants.
  friend AlgDiffPoly operator*(const AlgDiffPoly& a, const AlgDiffPoly& b);
  /// Constant algebra element times a polynomial.
  friend AlgDiffPoly operator*(const ExactElement& a, const AlgDiffPoly& b);
  friend bool operator==(const AlgDiffPoly& a, const AlgDiffPoly& b) { return a.components_ == b.components_; }

 private:
  void check_same(const AlgDiffPoly& o) const;

  ExactAlgebraPtr algebra_;
  std::vector<DiffPoly> components_;
};

AlgDiffPoly total_x_derivative(const AlgDiffPoly& p);
AlgDiffPoly total_x_derivative(const AlgDiffPoly& p, unsigned times);
AlgDiffPoly substitute(const AlgDiffPoly& p, const Substitution& replacement);

/// δF/δu for the functional ∫ density dx, where density = tr F(u): the
/// coordinates are gram^{-1}·(δdensity/δu_k)_k so that
/// tr(δF/δu ∘ δu) = Σ_k (δdensity/δu_k) δu_k.
AlgDiffPoly alg_variational_derivative(const DiffPoly& density, const ExactAlgebraPtr& algebra,
                                       std::uint8_t field = field::kVelocity);

/// Componentwise scalar equations of an algebra-valued expression.
std::vector<DiffPoly> expand_components(const AlgDiffPoly& equation);

std::string to_string(const AlgDiffPoly& p, const Naming& naming);

}  // namespace fvir
