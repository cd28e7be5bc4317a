#include "fvir/notation.hpp"

#include <cctype>

namespace fvir {

SymbolTable componentwise_symbols(std::size_t dim) {
  SymbolTable t;
  Naming names = componentwise_naming(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    auto c = static_cast<std::uint8_t>(k);
    t[names(field::kVelocity, c)] = Jet{field::kVelocity, c, 0, false};
    t[names(field::kMoment, c)] = Jet{field::kMoment, c, 0, false};
  }
  return t;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const SymbolTable& symbols, const Rational& eps)
      : text_(text), symbols_(symbols), eps_(eps) {}

  DiffPoly parse_all() {
    DiffPoly p = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

  DiffPoly expression() {
    skip_ws();
    DiffPoly sum;
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    DiffPoly t = term();
    sum += negative ? -t : t;
    for (;;) {
      skip_ws();
      if (accept('+'))
        sum += term();
      else if (accept('-'))
        sum -= term();
      else
        break;
    }
    return sum;
  }

 private:
  DiffPoly term() {
    DiffPoly prod(1);
    bool any = false;
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = text_[pos_];
      if (c == '*') {
        if (!any) fail("dangling '*'");
        ++pos_;
        continue;
      }
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '(' || starts_with_epsilon())) break;
      prod = prod * power();
      any = true;
    }
    if (!any) fail("expected a term");
    return prod;
  }

  DiffPoly power() {
    DiffPoly base = atom();
    skip_ws();
    if (accept('^')) {
      skip_ws();
      unsigned n = 0;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected exponent");
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) n = n * 10 + unsigned(text_[pos_++] - '0');
      base = pow(base, n);
    }
    return base;
  }

  DiffPoly atom() {
    skip_ws();
    if (starts_with_epsilon()) {
      pos_ += text_.compare(pos_, 2, "\xCE\xB5") == 0 ? 2 : 3;
      return DiffPoly(eps_);
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return DiffPoly(number());
    if (c == '(') {
      ++pos_;
      DiffPoly inner = expression();
      skip_ws();
      if (!accept(')')) fail("expected ')'");
      auto [order, time] = subscript();
      if (time) fail("time derivative of a compound expression");
      return total_x_derivative(inner, order);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_++;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto it = symbols_.find(name);
      if (it == symbols_.end()) fail("unknown symbol '" + name + "'");
      Jet j = it->second;
      auto [order, time] = subscript();
      j.order = static_cast<std::uint8_t>(j.order + order);
      j.time = j.time || time;
      return DiffPoly::jet(j);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Rational number() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    // "3/2" is a fraction only when a digit follows the slash
    if (!at_end() && text_[pos_] == '/' && pos_ + 1 < text_.size() &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    return parse_rational(text_.substr(start, pos_ - start));
  }

  std::pair<unsigned, bool> subscript() {
    if (at_end() || text_[pos_] != '_') return {0, false};
    ++pos_;
    bool braced = accept('{');
    unsigned order = 0;
    bool time = false;
    std::size_t start = pos_;
    while (!at_end() && (text_[pos_] == 'x' || text_[pos_] == 't')) {
      if (text_[pos_] == 'x') ++order;
      else if (time) fail("second time derivative");
      else time = true;
      ++pos_;
    }
    if (pos_ == start) fail("empty subscript");
    if (braced && !accept('}')) fail("expected '}'");
    return {order, time};
  }

  bool starts_with_epsilon() const {
    return text_.compare(pos_, 2, "\xCE\xB5") == 0 || text_.compare(pos_, 3, "eps") == 0;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  bool accept(char c) {
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw NotationError(what + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  std::string_view text_;
  const SymbolTable& symbols_;
  Rational eps_;
  std::size_t pos_ = 0;
};

}  // namespace

DiffPoly parse_density(std::string_view text, const SymbolTable& symbols, const Rational& eps) {
  return Parser(text, symbols, eps).parse_all();
}

DiffPoly parse_equation(std::string_view text, const SymbolTable& symbols, const Rational& eps) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos) return parse_density(text, symbols, eps);
  return parse_density(text.substr(0, eq), symbols, eps) - parse_density(text.substr(eq + 1), symbols, eps);
}

}  // namespace fvir
