#include "fvir/algebra.hpp"

namespace fvir {

ExactAlgebra builtin_R() { return ExactAlgebra::make(1, {Rational(1)}, {Rational(1)}, {Rational(1)}, "R"); }

std::vector<Rational> z2_trace_vector(const Rational& eps, int trace_index) {
  if (trace_index != 1 && trace_index != 2)
    throw std::invalid_argument("Z2 trace index must be 1 or 2, got " + std::to_string(trace_index));
  // tr^(k)(A) = a_k + a_2 (1 - δ_{k,2}) δ_{ε,0}
  std::vector<Rational> t(2, Rational(0));
  t[static_cast<std::size_t>(trace_index - 1)] = 1;
  if (trace_index == 1 && eps == 0) t[1] += 1;
  return t;
}

ExactAlgebra builtin_Z2(const Rational& eps, int trace_index) {
  std::vector<Rational> c(8, Rational(0));
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rational& { return c[(i * 2 + j) * 2 + k]; };
  at(0, 0, 0) = 1;  // e1∘e1 = e1
  at(0, 1, 1) = 1;  // e1∘e2 = e2
  at(1, 0, 1) = 1;
  at(1, 1, 0) = eps;  // e2∘e2 = ε e1
  auto trace = z2_trace_vector(eps, trace_index);
  return ExactAlgebra::make(2, std::move(c), {Rational(1), Rational(0)}, std::move(trace),
                            "Z2(" + to_string(eps) + "," + std::to_string(trace_index) + ")");
}

ExactAlgebra builtin_Zl(std::size_t l, std::vector<Rational> trace) {
  if (l == 0) throw DimensionMismatch("Z_l needs l >= 1");
  std::vector<Rational> c(l * l * l, Rational(0));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j)
      if (i + j < l) c[(i * l + j) * l + (i + j)] = 1;
  std::vector<Rational> unit(l, Rational(0));
  unit[0] = 1;
  return ExactAlgebra::make(l, std::move(c), std::move(unit), std::move(trace), "Zl(" + std::to_string(l) + ")");
}

ExactAlgebra builtin_Zl_top(std::size_t l) {
  if (l == 0) throw DimensionMismatch("Z_l needs l >= 1");
  std::vector<Rational> trace(l, Rational(0));
  trace[l - 1] = 1;
  auto a = builtin_Zl(l, trace);
  return ExactAlgebra::make(l, a.structure_constants(), a.unit().coeffs(), std::move(trace),
                            "Zl(" + std::to_string(l) + ",top)");
}

}  // namespace fvir
