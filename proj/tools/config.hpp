#pragma once

// Sectioned key-value run configuration.
//
//   [algebra]  preset = Z2(eps=-1,k=2) | Zl(l=3) | Zl(2, trace=[1,0]) | R
//              or dim / structure_constants / unit / trace (inline or in
//              the file named by `definition`)
//              traces = basic | own | name: a,b ; name: c,d
//   [inertia]  alpha0, alpha1, … and zeta as component vectors
//   [domain]   L, N
//   [time]     dt, t_end, scheme = auto | rk4 | ifrk4
//   [initial]  profile = zero | sine | sech2 | file, variable = u | m, …
//   [output]   path, every, fields
//
// Vectors are rational strings separated by spaces or commas; `unit` and
// `zero` name the unit and zero of the algebra.

#include "fvir/euler.hpp"
#include "fvir/grid.hpp"
#include "fvir/solver.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fvir::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InitialSpec {
  std::string profile = "zero";
  std::string variable = "u";
  // sine
  int k = 1;
  std::vector<double> amplitude;
  std::vector<double> offset;
  // sech2
  double c = 1.0;
  double x0 = 0.0;
  std::size_t component = 0;
  // file
  std::string path;
};

struct OutputSpec {
  std::string path;
  std::size_t every = 1;
  bool fields = false;
};

struct RunConfig {
  ExactAlgebraPtr algebra;
  std::optional<Rational> z2_eps;  // set for the Z2 preset
  std::vector<TraceChoice> traces;
  InertiaSpec inertia;
  ExactElement zeta;
  bool has_inertia = false;

  double length = 2.0 * 3.141592653589793;
  std::size_t n = 128;
  RunSpec time;
  Scheme scheme = Scheme::Auto;
  InitialSpec initial;
  OutputSpec output;
};

/// Parses the file at path. Throws ConfigError on malformed input and lets
/// AlgebraError (DegenerateTrace, …) escape for invalid algebra data.
RunConfig load_config(const std::string& path);
RunConfig parse_config(const std::string& text, const std::string& base_dir = ".");

/// Parses "Z2(eps=-1,k=2)", "Zl(3)", "Zl(2, trace=[1,0])", "R".
ExactAlgebra parse_preset(const std::string& text, std::optional<Rational>* z2_eps = nullptr);

/// Initial field on the configured grid.
GridField initial_field(const RunConfig& cfg);

}  // namespace fvir::cli
