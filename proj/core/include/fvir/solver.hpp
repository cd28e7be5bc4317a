#pragma once

// Pseudo-spectral integration of m_t = −(2m∘u_x + m_x∘u + ζ∘u_xxx), m = Λ(u),
// on [0, L) with per-mode inertia inversion through the regular
// representation and 2/3-rule dealiasing of the quadratic terms.

#include "fvir/euler.hpp"
#include "fvir/grid.hpp"

#include <Eigen/Dense>

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fvir {

class SingularSymbol : public std::runtime_error {
 public:
  SingularSymbol(double kappa, const std::string& what) : std::runtime_error(what), kappa_(kappa) {}
  double kappa() const { return kappa_; }

 private:
  double kappa_;
};

class NonzeroMeanHS : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CflViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericalBlowup : public std::runtime_error {
 public:
  NumericalBlowup(double t, const std::string& what) : std::runtime_error(what), time_(t) {}
  double time() const { return time_; }

 private:
  double time_;
};

enum class Scheme {
  Auto,   // ifrk4 when ζ ≠ 0, rk4 otherwise
  RK4,    // classical explicit Runge–Kutta
  IFRK4,  // Lawson integrating-factor RK4, ζ∘∂³Λ⁻¹ advanced exactly
};

Scheme parse_scheme(const std::string& name);
std::string to_string(Scheme s);

/// dt·max_κ‖A_κ‖₂ must stay below this for explicit RK4, where
/// A_κ = iκ³ L_ζ L_{S(κ)}⁻¹ is the dispersive part of the linearization.
inline constexpr double kRk4StabilityRadius = 2.8284271247461903;

inline constexpr double kBlowupThreshold = 1e8;

struct DiagnosticRecord {
  double t = 0.0;
  std::vector<double> h1;  // one per trace
  std::vector<double> h2;  // empty when H₂ is undefined (n ≥ 2)
  std::vector<double> drift_h1;
  std::vector<double> drift_h2;
};

class Solver {
 public:
  Solver(EulerEquation equation, std::size_t n, double length, Scheme scheme = Scheme::Auto,
         std::vector<TraceChoice> traces = {});

  const EulerEquation& equation() const { return eq_; }
  const Fourier& fourier() const { return fourier_; }
  Scheme scheme() const { return scheme_; }
  std::size_t size() const { return fourier_.size(); }
  std::size_t dim() const { return fourier_.dim(); }
  double length() const { return fourier_.length(); }
  double time() const { return t_; }
  /// Overrides the clock, e.g. to snap accumulated step sums to t0 + s·dt.
  void set_time(double t) { t_ = t; }
  const std::vector<TraceChoice>& traces() const { return traces_; }
  /// True when S(0) is singular and the zero modes are gauged away.
  bool zero_mode_gauge() const { return gauge_zero_mode_; }

  /// Initial data given by the velocity; m = Λ(u) spectrally.
  void set_velocity(const GridField& u, double t = 0.0);
  /// Initial data given by the moment. Throws NonzeroMeanHS when the zero
  /// mode is gauged and m has a nonzero mean.
  void set_moment(const GridField& m, double t = 0.0);

  GridField moment() const;
  GridField velocity() const;
  const Spectrum& moment_spectrum() const { return m_hat_; }

  /// u = Λ⁻¹ m mode by mode.
  Spectrum invert_inertia(const Spectrum& m_hat) const;
  /// Λ(u) mode by mode.
  Spectrum apply_inertia(const Spectrum& u_hat) const;

  /// dm/dt at the current state, in physical space.
  GridField rhs_eval() const;
  GridField rhs_eval(const GridField& m) const;

  /// Largest stable explicit RK4 step.
  double max_explicit_dt() const;

  /// One step of the configured scheme; negative dt integrates backwards.
  /// Throws CflViolation (explicit RK4 only) and NumericalBlowup.
  void step(double dt);

  DiagnosticRecord diagnostics() const;

 private:
  using Mat = Eigen::MatrixXcd;

  Spectrum nonlinear(const Spectrum& m_hat) const;
  Spectrum full_rhs(const Spectrum& m_hat) const;
  void check_gauge(const Spectrum& m_hat, double scale) const;
  const std::vector<Mat>& propagator(double h) const;
  Spectrum apply_modes(const std::vector<Mat>& ops, const Spectrum& s) const;
  void check_blowup() const;

  GridField product(const GridField& a, const GridField& b) const;

  EulerEquation eq_;
  Fourier fourier_;
  Scheme scheme_;
  std::vector<TraceChoice> traces_;
  bool gauge_zero_mode_ = false;

  std::vector<double> structure_;                 // C[i][j][k] as doubles
  std::vector<Eigen::MatrixXd> inertia_inverse_;  // L_{S(κ_j)}⁻¹, zero at a gauged mode
  std::vector<Eigen::MatrixXd> inertia_;          // L_{S(κ_j)}
  Eigen::MatrixXd zeta_matrix_;                   // L_ζ
  std::vector<Mat> linear_;                       // A_κ = iκ³ L_ζ L_S⁻¹
  mutable std::map<double, std::vector<Mat>> propagators_;

  double t_ = 0.0;
  Spectrum m_hat_;
  std::optional<DiagnosticRecord> initial_;
};

struct RunSpec {
  double dt = 1e-3;
  double t_end = 1.0;
  /// Diagnostics every this many steps (the final state is always recorded).
  std::size_t every = 1;
};

struct TimeSeries {
  std::vector<std::string> trace_names;
  bool has_h2 = false;
  std::vector<DiagnosticRecord> records;
};

/// Integrates to t_end in steps of dt (the last step is shortened to land
/// on t_end). The callback, if given, sees the solver after each record.
TimeSeries run(Solver& solver, const RunSpec& spec,
               const std::function<void(const Solver&, const DiagnosticRecord&)>& on_record = {});

/// Header "t,H1[tr],…,H2[tr],…,drift_H1[tr],…,drift_H2[tr],…" then one row per record.
void write_csv(std::ostream& out, const TimeSeries& series);

/// x, m components, u components.
void write_fields_csv(std::ostream& out, const Solver& solver);

}  // namespace fvir
