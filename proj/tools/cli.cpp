#include "cli.hpp"

#include "config.hpp"
#include "fvir/example_pairs.hpp"
#include "fvir/notation.hpp"
#include "fvir/verify.hpp"
#include "fvir/version.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

namespace fvir::cli {

namespace {

struct Options {
  std::string config;
  std::string out;
  bool json = false;
  bool inject_error = false;
};

class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ConfigError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

EulerEquation equation_of(const RunConfig& cfg) {
  if (!cfg.has_inertia) throw ConfigError("[inertia] must list at least alpha0");
  return build_euler_equation(cfg.algebra, cfg.inertia, cfg.zeta);
}

int cmd_algebra_info(const Options& o, std::ostream& out) {
  const RunConfig cfg = load_config(o.config);
  const ExactAlgebra& a = *cfg.algebra;
  const std::size_t l = a.dim();
  auto matrix_rows = [&](const DenseMatrix<Rational>& m) {
    std::vector<std::vector<std::string>> rows(l);
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = 0; j < l; ++j) rows[i].push_back(to_string(m(i, j)));
    return rows;
  };
  auto strings = [](const std::vector<Rational>& v) {
    std::vector<std::string> s;
    for (const auto& x : v) s.push_back(to_string(x));
    return s;
  };
  nlohmann::ordered_json doc;
  doc["name"] = a.name();
  doc["dim"] = l;
  nlohmann::ordered_json table = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = i; j < l; ++j)
      table.push_back({{"product", "e" + std::to_string(i + 1) + "*e" + std::to_string(j + 1)},
                       {"value", to_string(a.multiply(a.basis(i), a.basis(j)))}});
  doc["products"] = table;
  doc["unit"] = strings(a.unit().coeffs());
  doc["trace"] = strings(a.trace_vector());
  doc["gram"] = matrix_rows(a.gram());
  doc["gram_inverse"] = matrix_rows(a.gram_inverse());
  nlohmann::ordered_json traces = nlohmann::ordered_json::array();
  for (const auto& t : cfg.traces) {
    bool nondegenerate = true;
    try {
      (void)a.with_trace(t.trace);
    } catch (const DegenerateTrace&) {
      nondegenerate = false;
    }
    traces.push_back({{"name", t.name}, {"trace", strings(t.trace)}, {"nondegenerate", nondegenerate}});
  }
  doc["traces"] = traces;

  OutputTarget target(o.out, out);
  if (o.json) {
    target.stream() << doc.dump(2) << "\n";
    return kSuccess;
  }
  std::ostream& s = target.stream();
  s << "algebra " << a.name() << " (dimension " << l << ")\n";
  for (const auto& p : table) s << "  " << p["product"].get<std::string>() << " = " << p["value"].get<std::string>() << "\n";
  s << "unit  " << to_string(a.unit()) << "\n";
  s << "trace " << to_string(ExactElement(a.trace_vector())) << "\n";
  s << "gram\n";
  for (const auto& row : doc["gram"]) {
    s << " ";
    for (const auto& x : row) s << " " << x.get<std::string>();
    s << "\n";
  }
  for (const auto& t : traces)
    s << "trace " << t["name"].get<std::string>() << (t["nondegenerate"].get<bool>() ? " nondegenerate" : " degenerate")
      << "\n";
  return kSuccess;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const RunConfig cfg = load_config(o.config);
  std::vector<Report> reports;
  reports.push_back(verify_algebra_axioms(cfg.algebra));
  for (const auto& t : cfg.traces) {
    auto traced = std::make_shared<const ExactAlgebra>(cfg.algebra->with_trace(t.trace, cfg.algebra->name() + "/" + t.name));
    reports.push_back(verify_cocycle(traced));
  }
  reports.push_back(verify_bracket(cfg.algebra));

  if (cfg.has_inertia) {
    const EulerEquation eq = equation_of(cfg);
    const std::size_t l = cfg.algebra->dim();
    if (eq.order() <= 1) {
      BihamiltonianOptions bo;
      if (o.inject_error) bo.h2_scale = Rational(11, 10);
      reports.push_back(verify_bihamiltonian(cfg.algebra, eq.inertia.coefficient(0, l), eq.inertia.coefficient(1, l),
                                             eq.zeta, bo));
    }
    reports.push_back(rhs_is_hamiltonian_J2(eq, o.inject_error ? Rational(11, 10) * eq.rhs : eq.rhs));
  }

  if (cfg.z2_eps) {
    const Rational eps = *cfg.z2_eps != 0 ? *cfg.z2_eps : Rational(1);
    ExamplePairOptions po;
    po.perturb = o.inject_error;
    for (const Rational& e : {eps, Rational(0)})
      for (auto system : {PairSystem::KdV, PairSystem::CH, PairSystem::HS})
        reports.push_back(verify_example_pairs(system, e, po));
  }

  const bool passed = std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.passed(); });
  if (!o.out.empty()) {
    OutputTarget file(o.out, out);
    file.stream() << reports_to_json(reports);
  }
  if (o.json)
    out << reports_to_json(reports);
  else
    out << reports_to_text(reports) << (passed ? "all identities hold\n" : "some identities FAILED\n");
  return passed ? kSuccess : kFailure;
}

int cmd_expand(const Options& o, std::ostream& out) {
  const RunConfig cfg = load_config(o.config);
  const EulerEquation eq = equation_of(cfg);
  OutputTarget target(o.out, out);
  if (o.json) {
    nlohmann::ordered_json doc;
    doc["kind"] = to_string(eq.kind);
    doc["lines"] = expand_lines(eq);
    target.stream() << doc.dump(2) << "\n";
  } else {
    for (const auto& line : expand_lines(eq)) target.stream() << line << "\n";
  }
  return kSuccess;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  const RunConfig cfg = load_config(o.config);
  const EulerEquation eq = equation_of(cfg);
  const GridField initial = initial_field(cfg);
  Solver solver(eq, cfg.n, cfg.length, cfg.scheme, cfg.traces);
  if (cfg.initial.variable == "m")
    solver.set_moment(initial);
  else
    solver.set_velocity(initial);

  const std::string path = !o.out.empty() ? o.out : cfg.output.path;
  OutputTarget target(path, out);
  TimeSeries series = run(solver, cfg.time);
  write_csv(target.stream(), series);
  if (cfg.output.fields) {
    if (path.empty()) throw ConfigError("output.fields needs output.path or --out");
    std::ofstream fields(path + ".fields.csv");
    if (!fields) throw ConfigError("cannot write '" + path + ".fields.csv'");
    write_fields_csv(fields, solver);
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Euler equations on Frobenius-Virasoro duals: verification, expansion, simulation", "fvir"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Options o;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config, "configuration file")->required();
    sub->add_option("--out", o.out, "write the result to this file");
    sub->add_flag("--json", o.json, "machine-readable output");
  };
  CLI::App* verify = app.add_subcommand("verify", "run the exact symbolic identity suites");
  add_common(verify);
  verify->add_flag("--inject-error", o.inject_error, "perturb every checked identity (negative control)");
  CLI::App* expand = app.add_subcommand("expand", "print the componentwise equations");
  add_common(expand);
  CLI::App* simulate = app.add_subcommand("simulate", "integrate the flow and write diagnostics as CSV");
  add_common(simulate);
  CLI::App* info = app.add_subcommand("algebra-info", "describe the configured algebra");
  add_common(info);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kConfigError;
  }

  try {
    if (verify->parsed()) return cmd_verify(o, out);
    if (expand->parsed()) return cmd_expand(o, out);
    if (simulate->parsed()) return cmd_simulate(o, out);
    return cmd_algebra_info(o, out);
  } catch (const NumericalBlowup& e) {
    err << "error: numerical blow-up: " << e.what() << "\n";
    return kBlowup;
  } catch (const NonzeroMeanHS& e) {
    err << "error: NonzeroMeanHS: " << e.what() << "\n";
    return kFailure;
  } catch (const SingularSymbol& e) {
    err << "error: SingularSymbol: " << e.what() << "\n";
    return kFailure;
  } catch (const CflViolation& e) {
    err << "error: CflViolation: " << e.what() << "\n";
    return kFailure;
  } catch (const Unsupported& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  } catch (const DegenerateTrace& e) {
    err << "error: DegenerateTrace: " << e.what() << "\n";
    return kConfigError;
  } catch (const AlgebraError& e) {
    err << "error: invalid algebra: " << e.what() << "\n";
    return kConfigError;
  } catch (const ZeroInertia& e) {
    err << "error: ZeroInertia: " << e.what() << "\n";
    return kConfigError;
  } catch (const ConfigError& e) {
    err << "error: config: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    err << "error: config: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace fvir::cli
