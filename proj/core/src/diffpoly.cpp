#include "fvir/diffpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace fvir {

// ---------------------------------------------------------------- DiffPoly

DiffPoly::DiffPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

DiffPoly DiffPoly::jet(const Jet& j) {
  DiffPoly p;
  p.terms_.emplace(Monomial{j}, Rational(1));
  return p;
}

DiffPoly DiffPoly::variable(std::uint8_t f, std::uint8_t comp, std::uint8_t order) {
  return jet(Jet{f, comp, order, false});
}

void DiffPoly::add_term(Monomial m, const Rational& c) {
  if (c == 0) return;
  std::sort(m.begin(), m.end());
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational DiffPoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int DiffPoly::max_order() const {
  int m = -1;
  for (const auto& [mono, c] : terms_)
    for (const auto& j : mono) m = std::max(m, int(j.order));
  return m;
}

int DiffPoly::max_degree() const {
  int d = -1;
  for (const auto& [mono, c] : terms_) d = std::max(d, int(mono.size()));
  return d;
}

std::set<std::tuple<std::uint8_t, std::uint8_t, bool>> DiffPoly::variables() const {
  std::set<std::tuple<std::uint8_t, std::uint8_t, bool>> vars;
  for (const auto& [mono, c] : terms_)
    for (const auto& j : mono) vars.emplace(j.field, j.comp, j.time);
  return vars;
}

DiffPoly DiffPoly::homogeneous_part(int degree) const {
  DiffPoly out;
  for (const auto& [mono, c] : terms_)
    if (int(mono.size()) == degree) out.terms_.emplace(mono, c);
  return out;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
  for (const auto& [mono, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
  for (const auto& [mono, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(mono, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

DiffPoly& DiffPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, coeff] : terms_) coeff *= c;
  return *this;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  DiffPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      m.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      Rational c = ca * cb;
      auto [it, inserted] = out.terms_.try_emplace(std::move(m), c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  return out;
}

DiffPoly pow(const DiffPoly& p, unsigned n) {
  DiffPoly r(1);
  for (unsigned i = 0; i < n; ++i) r = r * p;
  return r;
}

// ----------------------------------------------------------- calculus

DiffPoly total_x_derivative(const DiffPoly& p) {
  DiffPoly out;
  for (const auto& [mono, c] : p.terms()) {
    for (std::size_t i = 0; i < mono.size(); ++i) {
      // repeated jets are visited once per occurrence, which supplies the
      // multiplicity factor of the product rule
      Monomial m = mono;
      ++m[i].order;
      out.add_term(std::move(m), c);
    }
  }
  return out;
}

DiffPoly total_x_derivative(const DiffPoly& p, unsigned times) {
  DiffPoly r = p;
  for (unsigned i = 0; i < times; ++i) r = total_x_derivative(r);
  return r;
}

DiffPoly partial_derivative(const DiffPoly& p, const Jet& j) {
  DiffPoly out;
  for (const auto& [mono, c] : p.terms()) {
    auto first = std::find(mono.begin(), mono.end(), j);
    if (first == mono.end()) continue;
    auto count = std::count(mono.begin(), mono.end(), j);
    Monomial m = mono;
    m.erase(m.begin() + (first - mono.begin()));
    out.add_term(std::move(m), c * Rational(count));
  }
  return out;
}

namespace {

DiffPoly euler_operator_any(const DiffPoly& p, std::uint8_t f, std::uint8_t comp, bool time) {
  int top = -1;
  for (const auto& [mono, c] : p.terms())
    for (const auto& j : mono)
      if (j.field == f && j.comp == comp && j.time == time) top = std::max(top, int(j.order));
  DiffPoly out;
  for (int n = 0; n <= top; ++n) {
    DiffPoly d = partial_derivative(p, Jet{f, comp, static_cast<std::uint8_t>(n), time});
    if (d.is_zero()) continue;
    d = total_x_derivative(d, static_cast<unsigned>(n));
    if (n % 2) d *= Rational(-1);
    out += d;
  }
  return out;
}

}  // namespace

DiffPoly euler_operator(const DiffPoly& p, std::uint8_t f, std::uint8_t comp) {
  return euler_operator_any(p, f, comp, false);
}

bool is_total_derivative(const DiffPoly& p) {
  if (p.constant_term() != 0) return false;
  for (const auto& [f, comp, time] : p.variables())
    if (!euler_operator_any(p, f, comp, time).is_zero()) return false;
  return true;
}

DiffPoly antiderivative(const DiffPoly& p) {
  if (!is_total_derivative(p)) throw std::domain_error("density is not a total x-derivative");
  // For a homogeneous part f_d of degree d:
  //   d·f_d = D( Σ_vars Σ_{k≥1} Σ_{j<k} u^(j) (−D)^{k−1−j} ∂f_d/∂u^(k) ) + Σ_vars u·E(f_d)
  // and the Euler terms vanish.
  DiffPoly result;
  const auto vars = p.variables();
  for (int d = 1; d <= p.max_degree(); ++d) {
    DiffPoly fd = p.homogeneous_part(d);
    if (fd.is_zero()) continue;
    DiffPoly h;
    for (const auto& [f, comp, time] : vars) {
      for (int k = 1; k <= fd.max_order(); ++k) {
        DiffPoly partial = partial_derivative(fd, Jet{f, comp, static_cast<std::uint8_t>(k), time});
        if (partial.is_zero()) continue;
        for (int j = 0; j < k; ++j) {
          DiffPoly t = total_x_derivative(partial, static_cast<unsigned>(k - 1 - j));
          if ((k - 1 - j) % 2) t *= Rational(-1);
          h += DiffPoly::jet(Jet{f, comp, static_cast<std::uint8_t>(j), time}) * t;
        }
      }
    }
    result += Rational(1, d) * h;
  }
  if (!(total_x_derivative(result) == p)) throw std::logic_error("homotopy antiderivative failed its own check");
  return result;
}

DiffPoly substitute(const DiffPoly& p, const Substitution& replacement) {
  std::map<Jet, DiffPoly> cache;
  auto image = [&](const Jet& j) -> const DiffPoly* {
    if (j.time) return nullptr;
    auto it = cache.find(j);
    if (it != cache.end()) return &it->second;
    auto base = replacement(j.field, j.comp);
    if (!base) return nullptr;
    return &cache.emplace(j, total_x_derivative(*base, j.order)).first->second;
  };
  DiffPoly out;
  for (const auto& [mono, c] : p.terms()) {
    DiffPoly term(c);
    Monomial kept;
    for (const auto& j : mono) {
      if (const DiffPoly* r = image(j))
        term = term * *r;
      else
        kept.push_back(j);
    }
    if (!kept.empty()) {
      DiffPoly k;
      k.add_term(std::move(kept), Rational(1));
      term = term * k;
    }
    out += term;
  }
  return out;
}

double evaluate(const DiffPoly& p, const std::function<double(const Jet&)>& jet_value) {
  double sum = 0.0;
  for (const auto& [mono, c] : p.terms()) {
    double t = c.get_d();
    for (const auto& j : mono) t *= jet_value(j);
    sum += t;
  }
  return sum;
}

// ------------------------------------------------------------- printing

Naming default_naming(std::size_t dim) {
  return [dim](std::uint8_t f, std::uint8_t comp) {
    std::string base;
    switch (f) {
      case field::kMoment: base = "m"; break;
      case field::kVelocity: base = "u"; break;
      case field::kV: base = "v"; break;
      case field::kW: base = "w"; break;
      default: base = "f" + std::to_string(int(f)); break;
    }
    return dim == 1 ? base : base + std::to_string(int(comp) + 1);
  };
}

Naming componentwise_naming(std::size_t dim) {
  if (dim != 2) return default_naming(dim);
  return [](std::uint8_t f, std::uint8_t comp) -> std::string {
    static const char* const velocity[] = {"v", "w"};
    static const char* const moment[] = {"p", "q"};
    if (f == field::kVelocity) return velocity[comp];
    if (f == field::kMoment) return moment[comp];
    return default_naming(2)(f, comp);
  };
}

namespace {

std::string jet_name(const Jet& j, const Naming& naming) {
  std::string s = naming(j.field, j.comp);
  if (j.order > 0 || j.time) {
    s += '_';
    s.append(j.order, 'x');
    if (j.time) s += 't';
  }
  return s;
}

std::string monomial_text(const Monomial& m, const Naming& naming) {
  std::string s;
  for (std::size_t i = 0; i < m.size();) {
    std::size_t k = i;
    while (k < m.size() && m[k] == m[i]) ++k;
    if (!s.empty()) s += '*';
    s += jet_name(m[i], naming);
    if (k - i > 1) s += '^' + std::to_string(k - i);
    i = k;
  }
  return s;
}

bool has_time(const Monomial& m) {
  return std::any_of(m.begin(), m.end(), [](const Jet& j) { return j.time; });
}

}  // namespace

std::string to_string(const DiffPoly& p, const Naming& naming) {
  if (p.is_zero()) return "0";
  std::vector<const DiffPoly::TermMap::value_type*> order;
  for (const auto& t : p.terms()) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
    bool ta = has_time(a->first), tb = has_time(b->first);
    if (ta != tb) return ta;
    return a->first.size() > b->first.size();
  });
  std::string out;
  bool first = true;
  for (const auto* term : order) {
    const Monomial& m = term->first;
    Rational c = term->second;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (m.empty()) {
      out += to_string(c);
    } else {
      if (c != 1) out += to_string(c) + "*";
      out += monomial_text(m, naming);
    }
  }
  return out;
}

std::string to_string(const DiffPoly& p) { return to_string(p, default_naming(1)); }

// ---------------------------------------------------------- AlgDiffPoly

AlgDiffPoly::AlgDiffPoly(ExactAlgebraPtr algebra) : algebra_(std::move(algebra)) {
  components_.resize(algebra_->dim());
}

AlgDiffPoly::AlgDiffPoly(ExactAlgebraPtr algebra, std::vector<DiffPoly> components)
    : algebra_(std::move(algebra)), components_(std::move(components)) {
  if (components_.size() != algebra_->dim())
    throw DimensionMismatch("AlgDiffPoly needs " + std::to_string(algebra_->dim()) + " components");
}

AlgDiffPoly AlgDiffPoly::symbol(ExactAlgebraPtr algebra, std::uint8_t f) {
  AlgDiffPoly p(std::move(algebra));
  for (std::size_t k = 0; k < p.dim(); ++k) p.components_[k] = DiffPoly::variable(f, static_cast<std::uint8_t>(k));
  return p;
}

AlgDiffPoly AlgDiffPoly::time_symbol(ExactAlgebraPtr algebra, std::uint8_t f) {
  AlgDiffPoly p(std::move(algebra));
  for (std::size_t k = 0; k < p.dim(); ++k)
    p.components_[k] = DiffPoly::jet(Jet{f, static_cast<std::uint8_t>(k), 0, true});
  return p;
}

AlgDiffPoly AlgDiffPoly::constant(ExactAlgebraPtr algebra, const ExactElement& a) {
  algebra->check(a);
  AlgDiffPoly p(std::move(algebra));
  for (std::size_t k = 0; k < p.dim(); ++k) p.components_[k] = DiffPoly(a[k]);
  return p;
}

bool AlgDiffPoly::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const DiffPoly& p) { return p.is_zero(); });
}

DiffPoly AlgDiffPoly::trace() const {
  DiffPoly t;
  const auto& tv = algebra_->trace_vector();
  for (std::size_t k = 0; k < dim(); ++k)
    if (tv[k] != 0) t += tv[k] * components_[k];
  return t;
}

void AlgDiffPoly::check_same(const AlgDiffPoly& o) const {
  if (!algebra_ || !o.algebra_) throw DimensionMismatch("AlgDiffPoly without an algebra");
  if (o.dim() != dim()) throw DimensionMismatch("AlgDiffPoly dimension mismatch");
}

AlgDiffPoly& AlgDiffPoly::operator+=(const AlgDiffPoly& o) {
  check_same(o);
  for (std::size_t k = 0; k < dim(); ++k) components_[k] += o.components_[k];
  return *this;
}

AlgDiffPoly& AlgDiffPoly::operator-=(const AlgDiffPoly& o) {
  check_same(o);
  for (std::size_t k = 0; k < dim(); ++k) components_[k] -= o.components_[k];
  return *this;
}

AlgDiffPoly& AlgDiffPoly::operator*=(const Rational& c) {
  for (auto& p : components_) p *= c;
  return *this;
}

AlgDiffPoly operator*(const AlgDiffPoly& a, const AlgDiffPoly& b) {
  a.check_same(b);
  const ExactAlgebra& alg = a.algebra();
  const std::size_t l = a.dim();
  AlgDiffPoly out(a.algebra_);
  for (std::size_t i = 0; i < l; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < l; ++j) {
      if (b[j].is_zero()) continue;
      DiffPoly prod = a[i] * b[j];
      for (std::size_t k = 0; k < l; ++k) {
        const Rational& c = alg.constant(i, j, k);
        if (c != 0) out.components_[k] += c * prod;
      }
    }
  }
  return out;
}

AlgDiffPoly operator*(const ExactElement& a, const AlgDiffPoly& b) {
  return AlgDiffPoly::constant(b.algebra_ptr(), a) * b;
}

AlgDiffPoly total_x_derivative(const AlgDiffPoly& p) { return total_x_derivative(p, 1); }

AlgDiffPoly total_x_derivative(const AlgDiffPoly& p, unsigned times) {
  std::vector<DiffPoly> comps;
  comps.reserve(p.dim());
  for (const auto& c : p.components()) comps.push_back(total_x_derivative(c, times));
  return AlgDiffPoly(p.algebra_ptr(), std::move(comps));
}

AlgDiffPoly substitute(const AlgDiffPoly& p, const Substitution& replacement) {
  std::vector<DiffPoly> comps;
  comps.reserve(p.dim());
  for (const auto& c : p.components()) comps.push_back(substitute(c, replacement));
  return AlgDiffPoly(p.algebra_ptr(), std::move(comps));
}

AlgDiffPoly alg_variational_derivative(const DiffPoly& density, const ExactAlgebraPtr& algebra, std::uint8_t f) {
  const std::size_t l = algebra->dim();
  std::vector<DiffPoly> scalar_grad(l);
  for (std::size_t k = 0; k < l; ++k) scalar_grad[k] = euler_operator(density, f, static_cast<std::uint8_t>(k));
  const auto& ginv = algebra->gram_inverse();
  std::vector<DiffPoly> comps(l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t k = 0; k < l; ++k)
      if (ginv(i, k) != 0) comps[i] += ginv(i, k) * scalar_grad[k];
  return AlgDiffPoly(algebra, std::move(comps));
}

std::vector<DiffPoly> expand_components(const AlgDiffPoly& equation) { return equation.components(); }

std::string to_string(const AlgDiffPoly& p, const Naming& naming) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < p.dim(); ++k) {
    if (k) os << ", ";
    os << to_string(p[k], naming);
  }
  os << ')';
  return os.str();
}

}  // namespace fvir
