#pragma once

// Scalar differential operators Σ_k a_k ∂^k with differential-polynomial
// coefficients, as they appear in componentwise Poisson matrices
// (∂³ + v∂ + ∂v, q∂ + ∂q, ∂³ − ∂, …).

#include "fvir/diffpoly.hpp"

#include <map>
#include <optional>
#include <utility>

namespace fvir {

class DiffOperator {
 public:
  DiffOperator() = default;

  static DiffOperator identity() { return multiply(DiffPoly(1)); }
  /// ∂^k
  static DiffOperator d(unsigned k = 1);
  /// Multiplication by a.
  static DiffOperator multiply(const DiffPoly& a);

  /// k -> a_k, zero coefficients omitted.
  const std::map<unsigned, DiffPoly>& coefficients() const { return coeffs_; }
  int order() const { return coeffs_.empty() ? -1 : int(coeffs_.rbegin()->first); }
  bool is_zero() const { return coeffs_.empty(); }
  /// True when every coefficient is a rational constant.
  bool has_constant_coefficients() const;

  DiffPoly apply(const DiffPoly& f) const;

  DiffOperator& operator+=(const DiffOperator& o);
  DiffOperator& operator-=(const DiffOperator& o);
  DiffOperator& operator*=(const Rational& c);
  friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
  friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
  friend DiffOperator operator-(DiffOperator a) { return a *= Rational(-1); }
  friend DiffOperator operator*(const Rational& c, DiffOperator a) { return a *= c; }
  /// Composition (a∘b)(f) = a(b(f)).
  friend DiffOperator operator*(const DiffOperator& a, const DiffOperator& b);
  friend bool operator==(const DiffOperator&, const DiffOperator&) = default;

 private:
  void add(unsigned k, const DiffPoly& a);

  std::map<unsigned, DiffPoly> coeffs_;
};

/// P = Q∘Λ + R for a constant-coefficient Λ with ord R < ord Λ.
/// Throws std::invalid_argument if Λ is zero or not constant-coefficient.
std::pair<DiffOperator, DiffOperator> right_divide(const DiffOperator& p, const DiffOperator& lambda);

/// Local solution g of Λ g = f for a constant-coefficient Λ, with no
/// constant term added by integrations. Returns nullopt when no
/// differential-polynomial solution exists (the inverse is nonlocal on f).
std::optional<DiffPoly> solve_constant_coefficient(const DiffOperator& lambda, const DiffPoly& f);

}  // namespace fvir
