#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>

namespace fvir {

/// Exact rational scalar used for all symbolic work.
using Rational = mpq_class;

/// Parses "3", "-3/4" or a finite decimal such as "0.125" / "1e-3" exactly.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical text: "3", "-3/4".
std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

/// Zero tests and tolerances differ between the exact and the floating backend.
template <class Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static bool is_zero(const Rational& x, double /*scale*/ = 1.0) { return sgn(x) == 0; }
  static double magnitude(const Rational& x) { return std::abs(x.get_d()); }
  static Rational from_rational(const Rational& q) { return q; }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  /// Residuals of the algebra axioms must fall below this (times the scale).
  static constexpr double axiom_tolerance = 1e-14;
  /// Singularity threshold for determinants (times the scale).
  static constexpr double singular_tolerance = 1e-12;
  static bool is_zero(double x, double scale = 1.0) { return std::abs(x) <= axiom_tolerance * scale; }
  static double magnitude(double x) { return std::abs(x); }
  static double from_rational(const Rational& q) { return q.get_d(); }
};

}  // namespace fvir
