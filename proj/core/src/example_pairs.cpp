#include "fvir/example_pairs.hpp"

#include "fvir/notation.hpp"

#include <stdexcept>

namespace fvir {

std::string to_string(PairSystem s) {
  switch (s) {
    case PairSystem::KdV: return "KdV";
    case PairSystem::CH: return "CH";
    case PairSystem::HS: return "HS";
  }
  return "?";
}

namespace {

const SymbolTable& symbols() {
  static const SymbolTable table = componentwise_symbols(2);
  return table;
}

DiffPoly sym(const char* name) { return DiffPoly::jet(symbols().at(name)); }

DiffOperator d(unsigned k) { return DiffOperator::d(k); }

/// a∂ + ∂a
DiffOperator skew(const DiffPoly& a) {
  return DiffOperator::multiply(a) * d(1) + d(1) * DiffOperator::multiply(a);
}

OperatorMatrix matrix(DiffOperator a, DiffOperator b, DiffOperator c, DiffOperator e) {
  return {{{std::move(a), std::move(b)}, {std::move(c), std::move(e)}}};
}

OperatorMatrix scaled(const Rational& s, OperatorMatrix m) {
  for (auto& row : m)
    for (auto& entry : row) entry *= s;
  return m;
}

ExamplePairCase kdv_case(const Rational& eps) {
  ExamplePairCase c;
  c.system = PairSystem::KdV;
  c.eps = eps;
  c.lambda = DiffOperator::identity();
  c.equations = {"v_t+3vv_x+v_xxx+3εww_x", "w_t+3(vw)_x+w_xxx"};
  const DiffOperator j0 = d(3) + skew(sym("v"));
  const DiffOperator j1 = skew(sym("w"));
  const DiffOperator zero;
  if (eps != 0) {
    const Rational inv = Rational(1) / eps;
    c.presentations = {
        {"H2", scaled(-1, matrix(zero, d(1), d(1), zero)), "1/2(3v^2w+εw^3+2vw_xx)"},
        {"H1", scaled(-1, matrix(eps * j1, j0, j0, j1)), "vw"},
        {"H~2", scaled(-1, matrix(d(1), zero, zero, inv * d(1))), "1/2(v^3+vv_xx+3εvw^2+εww_xx)"},
        {"H~1", scaled(-1, matrix(j0, j1, j1, inv * j0)), "1/2(v^2+εw^2)"},
    };
  } else {
    c.presentations = {
        {"H2", scaled(-1, matrix(zero, d(1), d(1), zero)), "1/2(3v^2w+2vw_xx)"},
        {"H1", scaled(-1, matrix(zero, j0, j0, j1)), "vw"},
        {"H~2", scaled(-1, matrix(zero, d(1), d(1), -d(1))), "1/2(v^3+vv_xx+3v^2w+2vw_xx)"},
        {"H~1", scaled(-1, matrix(zero, j0, j0, j1 - j0)), "1/2(v^2+2vw)"},
    };
  }
  return c;
}

ExamplePairCase ch_hs_case(PairSystem system, const Rational& eps, FixtureText text) {
  const bool printed = text == FixtureText::AsPrinted;
  const bool ch = system == PairSystem::CH;
  ExamplePairCase c;
  c.system = system;
  c.eps = eps;
  c.lambda = ch ? DiffOperator::identity() - d(2) : -d(2);
  c.equations = {"p_t+2pv_x+p_xv+ε(2qw_x+q_xw)", "q_t+2qv_x+q_xv+2pw_x+p_xw"};
  const DiffOperator k0 = skew(sym("p"));
  const DiffOperator k1 = skew(sym("q"));
  const DiffOperator l = ch ? d(3) - d(1) : d(3);  // −∂Λ
  const DiffOperator zero;
  if (eps != 0) {
    const Rational inv = Rational(1) / eps;
    c.presentations = {
        {"H2", matrix(zero, l, l, zero),
         !ch      ? "1/4(2wvp+v^2q+εw^2q)"
         : printed ? "1/4(2vw_xx+2wv_xx-2wvv_xx-v^2w_xx-εw^2w_xx)"
                   : "1/4(6v^2w+2εw^3-2wvv_xx-v^2w_xx-εw^2w_xx)"},
        {"H1", scaled(-1, matrix(eps * k1, k0, k0, k1)), "1/2(qv+pw)"},
        {"H~2", matrix(l, zero, zero, inv * l),
         !ch      ? "1/4(pv^2+εpw^2+2εvwq)"
         : printed ? "1/4(2vv_xx-v^2v_xx+ε(ww_xx-w^2v_xx-2vww_xx))"
                   : "1/4(2v^3-v^2v_xx+ε(6vw^2-w^2v_xx-2vww_xx))"},
        {"H~1", scaled(-1, matrix(k0, k1, k1, inv * k0)), "1/2(pv+εqw)"},
    };
  } else {
    const DiffOperator second = (ch || printed) ? d(3) - d(1) : d(3);
    c.presentations = {
        {"H2", matrix(zero, l, l, zero),
         !ch      ? "1/4(2wvp+v^2q)"
         : printed ? "1/4(2vw_xx+2wv_xx-2wvv_xx-v^2w_xx)"
                   : "1/4(6v^2w-2wvv_xx-v^2w_xx)"},
        {"H1", scaled(-1, matrix(zero, k0, k0, k1)), "1/2(qv+pw)"},
        {"H~2", matrix(zero, second, second, -second),
         !ch      ? "1/4(pv^2+2wvp+v^2q)"
         : printed ? "1/4(2vw_xx+2wv_xx-2wvv_xx-v^2w_xx+2vv_xx-v^2v_xx)"
                   : "1/4(2v^3+6v^2w-2wvv_xx-v^2w_xx-v^2v_xx)"},
        {"H~1", scaled(-1, matrix(zero, k0, k0, k1 - k0)), "1/2(pv+qv+pw)"},
    };
  }
  return c;
}

DiffPoly drop_time_terms(const DiffPoly& p) {
  DiffPoly out;
  for (const auto& [mono, c] : p.terms()) {
    bool timed = false;
    for (const auto& j : mono) timed = timed || j.time;
    if (!timed) out.add_term(mono, c);
  }
  return out;
}

DiffPoly perturbed(const DiffPoly& h) {
  if (h.is_zero()) return h;
  const int degree = h.max_degree();
  for (const auto& [mono, c] : h.terms())
    if (int(mono.size()) == degree) {
      DiffPoly out = h;
      out.add_term(mono, c / 3);
      return out;
    }
  return h;
}

}  // namespace

ExamplePairCase example_pair_case(PairSystem system, const Rational& eps, FixtureText text) {
  if (system == PairSystem::KdV) return kdv_case(eps);
  return ch_hs_case(system, eps, text);
}

Report verify_example_pairs(PairSystem system, const Rational& eps, const ExamplePairOptions& options) {
  return verify_example_pairs(example_pair_case(system, eps), options);
}

Report verify_example_pairs(const ExamplePairCase& c, const ExamplePairOptions& options) {
  const Naming names = componentwise_naming(2);
  Report report{to_string(c.system) + " pairs [ε=" + to_string(c.eps) + "]", {}};

  // p, q -> Λv, Λw
  const std::array<DiffPoly, 2> moment = {c.lambda.apply(sym("v")), c.lambda.apply(sym("w"))};
  const Substitution to_velocity = [&](std::uint8_t f, std::uint8_t comp) -> std::optional<DiffPoly> {
    if (f == field::kMoment) return moment[comp];
    return std::nullopt;
  };
  auto substitute_op = [&](const DiffOperator& op) {
    DiffOperator out;
    for (const auto& [k, a] : op.coefficients())
      out += DiffOperator::multiply(substitute(a, to_velocity)) * DiffOperator::d(k);
    return out;
  };

  std::array<DiffPoly, 2> flow;
  for (int i = 0; i < 2; ++i) {
    const DiffPoly eq = parse_equation(c.equations[i], symbols(), c.eps);
    flow[i] = substitute(-drop_time_terms(eq), to_velocity);
  }

  for (const auto& pres : c.presentations) {
    DiffPoly h = substitute(parse_density(pres.density, symbols(), c.eps), to_velocity);
    if (options.perturb) h = perturbed(h);
    // δH/δv_j = Λ δH/δm_j, so P δH/δm = Q δH/δv + R Λ⁻¹ δH/δv for P = QΛ + R.
    const std::array<DiffPoly, 2> grad = {euler_operator(h, field::kVelocity, 0), euler_operator(h, field::kVelocity, 1)};
    bool local = true;
    std::array<DiffPoly, 2> result;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const DiffOperator p = substitute_op(pres.op[i][j]);
        if (p.is_zero()) continue;
        auto [q, r] = right_divide(p, c.lambda);
        result[i] += q.apply(grad[j]);
        if (r.is_zero()) continue;
        auto g = solve_constant_coefficient(c.lambda, grad[j]);
        if (!g) {
          local = false;
          continue;
        }
        result[i] += r.apply(*g);
      }
    if (!local) {
      report.add(pres.label + ": operator applied to δH is local", false, "Λ⁻¹ acting on a non-local remainder");
      continue;
    }
    for (int i = 0; i < 2; ++i) {
      const char* lhs = i == 0 ? "first" : "second";
      report.expect_zero(pres.label + ": " + lhs + " component of P δH/δm equals the flow", result[i] - flow[i], names);
    }
  }
  return report;
}

}  // namespace fvir
