#pragma once

// Parser for densities and equations written in the usual textbook notation:
// juxtaposition for products, subscripts for derivatives, optional ^ powers,
// ε (or "eps") for the Z₂ deformation parameter. Examples:
//   "3v^2w+εw^3+2vw_xx"
//   "q_t+2qv_x+q_xv+2pw_x+p_xw=0"
//   "v_t+3(vw)_x+w_xxx"

#include "fvir/diffpoly.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fvir {

class NotationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Symbol table: printable name -> underlying (field, comp) jet.
using SymbolTable = std::map<std::string, Jet>;

/// {u} for dimension 1, {v, w} for dimension 2 (velocity components) and
/// {m} / {p, q} for the moment components.
SymbolTable componentwise_symbols(std::size_t dim);

DiffPoly parse_density(std::string_view text, const SymbolTable& symbols, const Rational& eps = Rational(0));

/// "lhs = rhs" -> lhs − rhs. A missing "=" means "= 0".
DiffPoly parse_equation(std::string_view text, const SymbolTable& symbols, const Rational& eps = Rational(0));

}  // namespace fvir
