#pragma once

// Finite-dimensional commutative associative unital algebras equipped with a
// trace functional. The trace induces the symmetric form g(a,b) = tr(a∘b); the
// algebra is Frobenius when that form is nondegenerate.
//
// The same code serves two scalar backends: Rational for exact symbolic
// checks and double for the spectral solver.

#include "fvir/linalg.hpp"
#include "fvir/rational.hpp"

#include <cmath>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fvir {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class CommutativityViolation : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};
class AssociativityViolation : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};
class UnitViolation : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};
class DegenerateTrace : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};
class DimensionMismatch : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};
class NotInvertible : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Coordinates of an algebra element in the basis e_1..e_l.
template <class Scalar>
class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {}

  static AlgebraElement zero(std::size_t dim) { return AlgebraElement(std::vector<Scalar>(dim, Scalar(0))); }
  static AlgebraElement basis(std::size_t dim, std::size_t i) {
    auto e = zero(dim);
    e.coeffs_.at(i) = Scalar(1);
    return e;
  }

  std::size_t size() const { return coeffs_.size(); }
  const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }
  Scalar& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!(c == 0)) return false;
    return true;
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  AlgebraElement& operator*=(const Scalar& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Scalar& s, AlgebraElement a) { return a *= s; }
  friend AlgebraElement operator-(AlgebraElement a) { return a *= Scalar(-1); }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  template <class Other>
  AlgebraElement<Other> convert() const {
    std::vector<Other> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(ScalarTraits<Other>::from_rational(Rational(c)));
    return AlgebraElement<Other>(std::move(out));
  }

 private:
  void check_same(const AlgebraElement& o) const {
    if (o.size() != size()) throw DimensionMismatch("algebra elements of different dimension");
  }

  std::vector<Scalar> coeffs_;
};

template <class Scalar>
std::string to_string(const AlgebraElement<Scalar>& a) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ", ";
    if constexpr (ScalarTraits<Scalar>::exact)
      os << to_string(a[i]);
    else
      os << a[i];
  }
  os << ']';
  return os.str();
}

/// Validated Frobenius algebra (immutable after construction).
template <class Scalar>
class FrobeniusAlgebra {
 public:
  using Element = AlgebraElement<Scalar>;
  using Matrix = DenseMatrix<Scalar>;

  /// structure_constants is row-major C[i][j][k] with e_i∘e_j = Σ_k C[i][j][k] e_k.
  static FrobeniusAlgebra make(std::size_t dim, std::vector<Scalar> structure_constants, std::vector<Scalar> unit,
                               std::vector<Scalar> trace, std::string name = {}) {
    FrobeniusAlgebra a;
    if (dim == 0) throw DimensionMismatch("algebra dimension must be at least 1");
    if (structure_constants.size() != dim * dim * dim)
      throw DimensionMismatch("structure constants must have dim^3 = " + std::to_string(dim * dim * dim) +
                              " entries, got " + std::to_string(structure_constants.size()));
    if (unit.size() != dim) throw DimensionMismatch("unit must have " + std::to_string(dim) + " coordinates");
    if (trace.size() != dim) throw DimensionMismatch("trace must have " + std::to_string(dim) + " coordinates");
    a.dim_ = dim;
    a.constants_ = std::move(structure_constants);
    a.unit_ = Element(std::move(unit));
    a.trace_ = std::move(trace);
    a.name_ = std::move(name);
    a.validate_table();
    a.build_gram();
    return a;
  }

  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<Scalar>& structure_constants() const { return constants_; }
  const Element& unit() const { return unit_; }
  const std::vector<Scalar>& trace_vector() const { return trace_; }
  const Matrix& gram() const { return gram_; }
  const Matrix& gram_inverse() const { return gram_inverse_; }

  Element zero() const { return Element::zero(dim_); }
  Element basis(std::size_t i) const { return Element::basis(dim_, i); }

  Element multiply(const Element& a, const Element& b) const {
    check(a);
    check(b);
    Element c = zero();
    for (std::size_t i = 0; i < dim_; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (b[j] == 0) continue;
        Scalar ab = a[i] * b[j];
        for (std::size_t k = 0; k < dim_; ++k) c[k] += ab * constant(i, j, k);
      }
    }
    return c;
  }

  Scalar trace(const Element& a) const {
    check(a);
    Scalar s(0);
    for (std::size_t i = 0; i < dim_; ++i) s += trace_[i] * a[i];
    return s;
  }

  Scalar pairing_form(const Element& a, const Element& b) const { return trace(multiply(a, b)); }

  /// Regular representation: left_mult_matrix(a) * coeffs(b) = coeffs(a∘b).
  Matrix left_mult_matrix(const Element& a) const {
    check(a);
    Matrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k) m(k, j) += a[i] * constant(i, j, k);
    }
    return m;
  }

  Element invert(const Element& a) const {
    Matrix l = left_mult_matrix(a);
    Scalar det = determinant(l);
    if constexpr (ScalarTraits<Scalar>::exact) {
      if (det == 0) throw NotInvertible("element " + to_string(a) + " is not invertible (det L_a = 0)");
    } else {
      if (std::abs(det) < ScalarTraits<Scalar>::singular_tolerance)
        throw NotInvertible("element " + to_string(a) + " is not invertible (|det L_a| < 1e-12)");
    }
    auto x = solve(l, unit_.coeffs());
    if (!x) throw NotInvertible("element " + to_string(a) + " is not invertible");
    return Element(std::move(*x));
  }

  bool is_invertible(const Element& a) const {
    try {
      (void)invert(a);
      return true;
    } catch (const NotInvertible&) {
      return false;
    }
  }

  /// Same multiplication table, different trace functional.
  FrobeniusAlgebra with_trace(std::vector<Scalar> trace, std::string name = {}) const {
    return make(dim_, constants_, unit_.coeffs(), std::move(trace), std::move(name));
  }

  template <class Other>
  FrobeniusAlgebra<Other> convert() const {
    auto conv = [](const std::vector<Scalar>& v) {
      std::vector<Other> out;
      out.reserve(v.size());
      for (const auto& c : v) out.push_back(ScalarTraits<Other>::from_rational(Rational(c)));
      return out;
    };
    return FrobeniusAlgebra<Other>::make(dim_, conv(constants_), conv(unit_.coeffs()), conv(trace_), name_);
  }

  void check(const Element& a) const {
    if (a.size() != dim_)
      throw DimensionMismatch("element of dimension " + std::to_string(a.size()) + " used with algebra of dimension " +
                              std::to_string(dim_));
  }

 private:
  bool negligible(const Scalar& residual, double scale) const {
    return ScalarTraits<Scalar>::is_zero(residual, scale);
  }

  void validate_table() {
    double cmax = 1.0;
    for (const auto& c : constants_) cmax = std::max(cmax, ScalarTraits<Scalar>::magnitude(c));
    const double scale2 = cmax * cmax;
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k)
          if (!negligible(Scalar(constant(i, j, k) - constant(j, i, k)), cmax))
            throw CommutativityViolation("e" + std::to_string(i + 1) + "∘e" + std::to_string(j + 1) + " != e" +
                                         std::to_string(j + 1) + "∘e" + std::to_string(i + 1));
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k)
          for (std::size_t q = 0; q < dim_; ++q) {
            Scalar left(0), right(0);
            for (std::size_t p = 0; p < dim_; ++p) {
              left += constant(i, j, p) * constant(p, k, q);
              right += constant(j, k, p) * constant(i, p, q);
            }
            if (!negligible(Scalar(left - right), scale2))
              throw AssociativityViolation("(e" + std::to_string(i + 1) + "∘e" + std::to_string(j + 1) + ")∘e" +
                                           std::to_string(k + 1) + " != e" + std::to_string(i + 1) + "∘(e" +
                                           std::to_string(j + 1) + "∘e" + std::to_string(k + 1) + ")");
          }
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        Scalar s(0);
        for (std::size_t i = 0; i < dim_; ++i) s += unit_[i] * constant(i, j, k);
        Scalar expected(j == k ? 1 : 0);
        if (!negligible(Scalar(s - expected), cmax))
          throw UnitViolation("unit " + to_string(unit_) + " does not fix e" + std::to_string(j + 1));
      }
  }

  void build_gram() {
    gram_ = Matrix(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) gram_(i, j) = pairing_form(basis(i), basis(j));
    Scalar det = determinant(gram_);
    if constexpr (ScalarTraits<Scalar>::exact) {
      if (det == 0) throw DegenerateTrace("trace " + to_string(Element(trace_)) + " gives a singular Gram matrix");
    } else {
      const double gmax = gram_.max_abs();
      if (gmax == 0.0 || std::abs(det) < ScalarTraits<Scalar>::singular_tolerance * std::pow(gmax, double(dim_)))
        throw DegenerateTrace("trace " + to_string(Element(trace_)) + " gives a singular Gram matrix");
    }
    auto inv = inverse(gram_);
    if (!inv) throw DegenerateTrace("Gram matrix is not invertible");
    gram_inverse_ = std::move(*inv);
  }

  std::size_t dim_ = 0;
  std::vector<Scalar> constants_;
  Element unit_;
  std::vector<Scalar> trace_;
  Matrix gram_;
  Matrix gram_inverse_;
  std::string name_;
};

using ExactAlgebra = FrobeniusAlgebra<Rational>;
using ExactElement = AlgebraElement<Rational>;

/// The one-dimensional algebra ℝ with tr = id.
ExactAlgebra builtin_R();

/// Z₂^ε: e1∘e1 = e1, e1∘e2 = e2, e2∘e2 = ε e1 with the basic trace
/// tr^(k)(a1 e1 + a2 e2) = a_k + a2 (1 − δ_{k,2}) δ_{ε,0}, k ∈ {1,2}.
ExactAlgebra builtin_Z2(const Rational& eps, int trace_index);

/// Trace covector of the basic Z₂^ε trace tr^(k).
std::vector<Rational> z2_trace_vector(const Rational& eps, int trace_index);

/// Z_l = ℝ[t]/(t^l) with basis 1, t, …, t^{l−1} and a caller-supplied trace.
ExactAlgebra builtin_Zl(std::size_t l, std::vector<Rational> trace);

/// Z_l with the trace picking the coefficient of t^{l−1}.
ExactAlgebra builtin_Zl_top(std::size_t l);

}  // namespace fvir
