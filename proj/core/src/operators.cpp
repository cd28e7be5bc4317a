#include "fvir/operators.hpp"

#include <stdexcept>

namespace fvir {

namespace {

Rational binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

bool is_constant(const DiffPoly& p) { return p.is_zero() || (p.size() == 1 && p.terms().begin()->first.empty()); }

int weight(const Monomial& m) {
  int w = 0;
  for (const auto& j : m) w += j.order;
  return w;
}

DiffPoly weight_part(const DiffPoly& p, int w) {
  DiffPoly out;
  for (const auto& [mono, c] : p.terms())
    if (weight(mono) == w) out.add_term(mono, c);
  return out;
}

int max_weight(const DiffPoly& p) {
  int w = -1;
  for (const auto& [mono, c] : p.terms()) w = std::max(w, weight(mono));
  return w;
}

}  // namespace

DiffOperator DiffOperator::d(unsigned k) {
  DiffOperator op;
  op.coeffs_[k] = DiffPoly(1);
  return op;
}

DiffOperator DiffOperator::multiply(const DiffPoly& a) {
  DiffOperator op;
  op.add(0, a);
  return op;
}

void DiffOperator::add(unsigned k, const DiffPoly& a) {
  if (a.is_zero()) return;
  auto& slot = coeffs_[k];
  slot += a;
  if (slot.is_zero()) coeffs_.erase(k);
}

bool DiffOperator::has_constant_coefficients() const {
  for (const auto& [k, a] : coeffs_)
    if (!is_constant(a)) return false;
  return true;
}

DiffPoly DiffOperator::apply(const DiffPoly& f) const {
  DiffPoly out;
  for (const auto& [k, a] : coeffs_) out += a * total_x_derivative(f, k);
  return out;
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
  for (const auto& [k, a] : o.coeffs_) add(k, a);
  return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& o) {
  for (const auto& [k, a] : o.coeffs_) add(k, -a);
  return *this;
}

DiffOperator& DiffOperator::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [k, a] : coeffs_) a *= c;
  return *this;
}

DiffOperator operator*(const DiffOperator& a, const DiffOperator& b) {
  // (p ∂^i)∘(q ∂^j) = p Σ_r C(i,r) q^(r) ∂^(i−r+j)
  DiffOperator out;
  for (const auto& [i, p] : a.coeffs_)
    for (const auto& [j, q] : b.coeffs_)
      for (unsigned r = 0; r <= i; ++r) {
        DiffPoly qr = total_x_derivative(q, r);
        if (qr.is_zero()) continue;
        out.add(i - r + j, binomial(i, r) * (p * qr));
      }
  return out;
}

std::pair<DiffOperator, DiffOperator> right_divide(const DiffOperator& p, const DiffOperator& lambda) {
  if (lambda.is_zero()) throw std::invalid_argument("division by the zero operator");
  if (!lambda.has_constant_coefficients()) throw std::invalid_argument("divisor must have constant coefficients");
  const unsigned top = static_cast<unsigned>(lambda.order());
  const Rational lead = lambda.coefficients().at(top).constant_term();
  DiffOperator quotient;
  DiffOperator remainder = p;
  // constant coefficients commute with the quotient's, so this is plain
  // polynomial long division in ∂
  while (remainder.order() >= int(top)) {
    const unsigned k = static_cast<unsigned>(remainder.order());
    DiffPoly factor = (Rational(1) / lead) * remainder.coefficients().at(k);
    DiffOperator step = DiffOperator::multiply(factor) * DiffOperator::d(k - top);
    quotient += step;
    remainder -= step * lambda;
  }
  return {quotient, remainder};
}

std::optional<DiffPoly> solve_constant_coefficient(const DiffOperator& lambda, const DiffPoly& f) {
  if (lambda.is_zero()) throw std::invalid_argument("cannot invert the zero operator");
  if (!lambda.has_constant_coefficients()) throw std::invalid_argument("operator must have constant coefficients");
  if (f.is_zero()) return DiffPoly{};

  // Λ = Λ'∘∂^s with Λ' having a nonzero constant term.
  const unsigned shift = lambda.coefficients().begin()->first;
  std::map<unsigned, Rational> c;
  for (const auto& [k, a] : lambda.coefficients()) c[k - shift] = a.constant_term();
  const unsigned span = c.rbegin()->first;
  const Rational c0 = c.at(0);

  // Weight-graded recursion: c0 g_w = f_w − Σ_{k≥1} c_k D^k g_{w−k}.
  const int fmax = max_weight(f);
  std::vector<DiffPoly> g;
  for (int w = 0; w <= fmax + int(span); ++w) {
    DiffPoly rhs = weight_part(f, w);
    for (const auto& [k, ck] : c) {
      if (k == 0 || int(k) > w) continue;
      rhs -= ck * total_x_derivative(g[static_cast<std::size_t>(w) - k], k);
    }
    g.push_back((Rational(1) / c0) * rhs);
  }
  // Beyond fmax the recursion is homogeneous; `span` consecutive zero weights
  // force every later one to vanish.
  for (int w = fmax + 1; w <= fmax + int(span); ++w)
    if (!g[static_cast<std::size_t>(w)].is_zero()) return std::nullopt;
  DiffPoly h;
  for (int w = 0; w <= fmax; ++w) h += g[static_cast<std::size_t>(w)];

  for (unsigned i = 0; i < shift; ++i) {
    if (!is_total_derivative(h)) return std::nullopt;
    h = antiderivative(h);
  }
  if (!(lambda.apply(h) == f)) return std::nullopt;
  return h;
}

}  // namespace fvir
