#include "fvir/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace fvir {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  const std::string original(s);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("malformed rational literal '" + original + "'");
    mpz_class d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in '" + original + "'");
    value = Rational(mpz_class{std::string(num)}, d);
    value.canonicalize();
  } else {
    // decimal with optional exponent
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      auto exp_part = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
        exp_negative = exp_part.front() == '-';
        exp_part.remove_prefix(1);
      }
      if (!all_digits(exp_part) || exp_part.size() > 6)
        throw std::invalid_argument("malformed exponent in '" + original + "'");
      exponent = std::stol(std::string(exp_part));
      if (exp_negative) exponent = -exponent;
      s = s.substr(0, e);
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      auto int_part = s.substr(0, dot);
      auto frac_part = s.substr(dot + 1);
      if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)) ||
          (int_part.empty() && frac_part.empty()))
        throw std::invalid_argument("malformed decimal literal '" + original + "'");
      digits = std::string(int_part) + std::string(frac_part);
      exponent -= static_cast<long>(frac_part.size());
    } else {
      if (!all_digits(s)) throw std::invalid_argument("malformed number '" + original + "'");
      digits = std::string(s);
    }
    mpz_class num{digits};
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    value = exponent >= 0 ? Rational(num * scale) : Rational(num, scale);
    value.canonicalize();
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace fvir
