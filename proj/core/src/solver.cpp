#include "fvir/solver.hpp"

#include "fvir/version.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace fvir {

Scheme parse_scheme(const std::string& name) {
  if (name == "auto") return Scheme::Auto;
  if (name == "rk4") return Scheme::RK4;
  if (name == "ifrk4") return Scheme::IFRK4;
  throw std::invalid_argument("unknown scheme '" + name + "' (expected auto, rk4 or ifrk4)");
}

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::Auto: return "auto";
    case Scheme::RK4: return "rk4";
    case Scheme::IFRK4: return "ifrk4";
  }
  return "?";
}

namespace {

Eigen::MatrixXd regular_matrix(const std::vector<double>& c, const std::vector<double>& a, std::size_t l) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(Eigen::Index(l), Eigen::Index(l));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j)
      for (std::size_t k = 0; k < l; ++k) m(Eigen::Index(k), Eigen::Index(j)) += a[i] * c[(i * l + j) * l + k];
  return m;
}

std::vector<double> to_doubles(const ExactElement& a) {
  std::vector<double> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i].get_d());
  return out;
}

bool is_singular(const Eigen::MatrixXd& m) {
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return std::abs(m.determinant()) < 1e-12 * std::pow(scale, double(m.rows()));
}

double relative_drift(double h, double h0) {
  const double denom = std::abs(h0) > 0.0 ? std::abs(h0) : 1.0;
  return std::abs(h - h0) / denom;
}

}  // namespace

Solver::Solver(EulerEquation equation, std::size_t n, double length, Scheme scheme, std::vector<TraceChoice> traces)
    : eq_(std::move(equation)), fourier_(n, eq_.algebra->dim(), length), scheme_(scheme), traces_(std::move(traces)) {
  const std::size_t l = dim();
  if (traces_.empty()) traces_ = default_traces(*eq_.algebra, std::nullopt);
  for (const auto& t : traces_)
    if (t.trace.size() != l) throw DimensionMismatch("trace '" + t.name + "' has the wrong number of coordinates");
  for (const auto& c : eq_.algebra->structure_constants()) structure_.push_back(c.get_d());

  zeta_matrix_ = regular_matrix(structure_, to_doubles(eq_.zeta), l);
  if (scheme_ == Scheme::Auto) scheme_ = eq_.zeta.is_zero() ? Scheme::RK4 : Scheme::IFRK4;

  for (std::size_t j = 0; j < fourier_.modes(); ++j) {
    const double kappa = fourier_.wavenumber(j);
    Eigen::MatrixXd s = regular_matrix(structure_, eq_.inertia.symbol(kappa), l);
    Eigen::MatrixXd inv = Eigen::MatrixXd::Zero(Eigen::Index(l), Eigen::Index(l));
    if (is_singular(s)) {
      if (j != 0)
        throw SingularSymbol(kappa, "inertia symbol S(kappa) is not invertible at kappa = " + std::to_string(kappa));
      gauge_zero_mode_ = true;
    } else {
      inv = s.partialPivLu().inverse();
    }
    inertia_.push_back(s);
    inertia_inverse_.push_back(inv);
    const std::complex<double> d3 = fourier_.derivative_symbol(j, 3);
    linear_.push_back(-d3 * (zeta_matrix_ * inv).cast<std::complex<double>>());
  }
  m_hat_.assign(fourier_.modes() * l, 0.0);
  initial_ = diagnostics();
}

Spectrum Solver::apply_modes(const std::vector<Mat>& ops, const Spectrum& s) const {
  const std::size_t l = dim();
  Spectrum out(s.size());
  Eigen::VectorXcd v(static_cast<Eigen::Index>(l));
  for (std::size_t j = 0; j < fourier_.modes(); ++j) {
    for (std::size_t c = 0; c < l; ++c) v(Eigen::Index(c)) = s[j * l + c];
    Eigen::VectorXcd w = ops[j] * v;
    for (std::size_t c = 0; c < l; ++c) out[j * l + c] = w(Eigen::Index(c));
  }
  return out;
}

Spectrum Solver::invert_inertia(const Spectrum& m_hat) const {
  const std::size_t l = dim();
  Spectrum out(m_hat.size());
  for (std::size_t j = 0; j < fourier_.modes(); ++j)
    for (std::size_t k = 0; k < l; ++k) {
      std::complex<double> s = 0.0;
      for (std::size_t c = 0; c < l; ++c) s += inertia_inverse_[j](Eigen::Index(k), Eigen::Index(c)) * m_hat[j * l + c];
      out[j * l + k] = s;
    }
  return out;
}

Spectrum Solver::apply_inertia(const Spectrum& u_hat) const {
  const std::size_t l = dim();
  Spectrum out(u_hat.size());
  for (std::size_t j = 0; j < fourier_.modes(); ++j)
    for (std::size_t k = 0; k < l; ++k) {
      std::complex<double> s = 0.0;
      for (std::size_t c = 0; c < l; ++c) s += inertia_[j](Eigen::Index(k), Eigen::Index(c)) * u_hat[j * l + c];
      out[j * l + k] = s;
    }
  return out;
}

void Solver::check_gauge(const Spectrum& m_hat, double scale) const {
  if (!gauge_zero_mode_) return;
  double mean = 0.0;
  for (std::size_t c = 0; c < dim(); ++c) mean = std::max(mean, std::abs(m_hat[c]) / double(size()));
  if (mean > 1e-10 * scale)
    throw NonzeroMeanHS("the inertia operator annihilates constants, so m must have zero mean; got |mean(m)| = " +
                        std::to_string(mean));
}

void Solver::set_moment(const GridField& m, double t) {
  Spectrum s = fourier_.forward(m);
  check_gauge(s, m.max_abs());
  if (gauge_zero_mode_)
    for (std::size_t c = 0; c < dim(); ++c) s[c] = 0.0;
  m_hat_ = std::move(s);
  t_ = t;
  initial_.reset();
  initial_ = diagnostics();
}

void Solver::set_velocity(const GridField& u, double t) { set_moment(fourier_.inverse(apply_inertia(fourier_.forward(u))), t); }

GridField Solver::moment() const { return fourier_.inverse(m_hat_); }

GridField Solver::velocity() const { return fourier_.inverse(invert_inertia(m_hat_)); }

GridField Solver::product(const GridField& a, const GridField& b) const {
  const std::size_t l = dim();
  GridField out(a.n, l, a.length);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j)
      for (std::size_t k = 0; k < l; ++k) {
        const double c = structure_[(i * l + j) * l + k];
        if (c == 0.0) continue;
        for (std::size_t p = 0; p < a.n; ++p) out(p, k) += c * a(p, i) * b(p, j);
      }
  return out;
}

Spectrum Solver::nonlinear(const Spectrum& m_hat) const {
  const std::size_t l = dim();
  const Spectrum u_hat = invert_inertia(m_hat);
  Spectrum m_f(m_hat.size()), u_f(m_hat.size()), mx_f(m_hat.size()), ux_f(m_hat.size());
  for (std::size_t j = 0; j < fourier_.modes(); ++j) {
    if (!fourier_.retained(j)) continue;
    const auto d1 = fourier_.derivative_symbol(j, 1);
    for (std::size_t c = 0; c < l; ++c) {
      const std::size_t i = j * l + c;
      m_f[i] = m_hat[i];
      u_f[i] = u_hat[i];
      mx_f[i] = d1 * m_hat[i];
      ux_f[i] = d1 * u_hat[i];
    }
  }
  const GridField m = fourier_.inverse(m_f);
  const GridField u = fourier_.inverse(u_f);
  const GridField mx = fourier_.inverse(mx_f);
  const GridField ux = fourier_.inverse(ux_f);
  GridField transport = product(m, ux);
  const GridField second = product(mx, u);
  for (std::size_t p = 0; p < transport.values.size(); ++p)
    transport.values[p] = 2.0 * transport.values[p] + second.values[p];
  Spectrum out = fourier_.forward(transport);
  for (std::size_t j = 0; j < fourier_.modes(); ++j)
    for (std::size_t c = 0; c < l; ++c) out[j * l + c] = fourier_.retained(j) ? -out[j * l + c] : 0.0;
  return out;
}

Spectrum Solver::full_rhs(const Spectrum& m_hat) const {
  Spectrum out = nonlinear(m_hat);
  const Spectrum lin = apply_modes(linear_, m_hat);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += lin[i];
  return out;
}

GridField Solver::rhs_eval() const { return fourier_.inverse(full_rhs(m_hat_)); }

GridField Solver::rhs_eval(const GridField& m) const { return fourier_.inverse(full_rhs(fourier_.forward(m))); }

double Solver::max_explicit_dt() const {
  double norm = 0.0;
  for (const auto& a : linear_) {
    if (a.cwiseAbs().maxCoeff() == 0.0) continue;
    Eigen::JacobiSVD<Mat> svd(a);
    norm = std::max(norm, svd.singularValues()(0));
  }
  return norm == 0.0 ? std::numeric_limits<double>::infinity() : kRk4StabilityRadius / norm;
}

const std::vector<Solver::Mat>& Solver::propagator(double h) const {
  auto it = propagators_.find(h);
  if (it != propagators_.end()) return it->second;
  if (propagators_.size() > 8) propagators_.clear();
  std::vector<Mat> ops;
  ops.reserve(linear_.size());
  for (const auto& a : linear_) ops.push_back((a * h).exp());
  return propagators_.emplace(h, std::move(ops)).first->second;
}

void Solver::check_blowup() const {
  const GridField m = moment();
  if (!m.all_finite()) throw NumericalBlowup(t_, "non-finite values in m at t = " + std::to_string(t_));
  const double peak = m.max_abs();
  if (peak > kBlowupThreshold)
    throw NumericalBlowup(t_, "max|m| = " + std::to_string(peak) + " exceeds 1e8 at t = " + std::to_string(t_));
}

void Solver::step(double dt) {
  const std::size_t size = m_hat_.size();
  auto axpy = [size](const Spectrum& y, double a, const Spectrum& k) {
    Spectrum out(size);
    for (std::size_t i = 0; i < size; ++i) out[i] = y[i] + a * k[i];
    return out;
  };
  if (scheme_ == Scheme::RK4) {
    const double limit = max_explicit_dt();
    if (std::abs(dt) > limit)
      throw CflViolation("explicit rk4 needs |dt| <= " + std::to_string(limit) + " on this grid; use ifrk4");
    const Spectrum k1 = full_rhs(m_hat_);
    const Spectrum k2 = full_rhs(axpy(m_hat_, dt / 2, k1));
    const Spectrum k3 = full_rhs(axpy(m_hat_, dt / 2, k2));
    const Spectrum k4 = full_rhs(axpy(m_hat_, dt, k3));
    for (std::size_t i = 0; i < size; ++i) m_hat_[i] += dt / 6 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  } else {
    const auto& e = propagator(dt);
    const auto& e_half = propagator(dt / 2);
    const Spectrum k1 = nonlinear(m_hat_);
    const Spectrum k2 = nonlinear(apply_modes(e_half, axpy(m_hat_, dt / 2, k1)));
    const Spectrum k3 = nonlinear(axpy(apply_modes(e_half, m_hat_), dt / 2, k2));
    const Spectrum e_y = apply_modes(e, m_hat_);
    const Spectrum k4 = nonlinear(axpy(e_y, dt, apply_modes(e_half, k3)));
    const Spectrum e_k1 = apply_modes(e, k1);
    const Spectrum e_k23 = apply_modes(e_half, axpy(k2, 1.0, k3));
    for (std::size_t i = 0; i < size; ++i) m_hat_[i] = e_y[i] + dt / 6 * (e_k1[i] + 2.0 * e_k23[i] + k4[i]);
  }
  t_ += dt;
  check_blowup();
}

DiagnosticRecord Solver::diagnostics() const {
  const std::size_t l = dim();
  const GridField m = moment();
  const Spectrum u_hat = invert_inertia(m_hat_);
  const GridField u = fourier_.inverse(u_hat);
  const bool with_h2 = eq_.order() <= 1;
  const double dx = length() / double(size());

  // Pointwise densities as algebra elements: m∘u and ζ∘u∘u_xx + α∘u³ − ½β∘u²∘u_xx.
  const GridField mu = product(m, u);
  GridField h2_density;
  if (with_h2) {
    Spectrum uxx_hat = u_hat;
    for (std::size_t j = 0; j < fourier_.modes(); ++j)
      for (std::size_t c = 0; c < l; ++c) uxx_hat[j * l + c] *= fourier_.derivative_symbol(j, 2);
    const GridField uxx = fourier_.inverse(uxx_hat);
    auto constant_field = [&](const ExactElement& a) {
      GridField f(size(), l, length());
      for (std::size_t p = 0; p < size(); ++p)
        for (std::size_t c = 0; c < l; ++c) f(p, c) = a[c].get_d();
      return f;
    };
    const GridField alpha = constant_field(eq_.inertia.coefficient(0, l));
    const GridField beta = constant_field(eq_.inertia.coefficient(1, l));
    const GridField zeta = constant_field(eq_.zeta);
    const GridField uu = product(u, u);
    const GridField a = product(zeta, product(u, uxx));
    const GridField b = product(alpha, product(uu, u));
    const GridField c = product(beta, product(uu, uxx));
    h2_density = a;
    for (std::size_t p = 0; p < a.values.size(); ++p) h2_density.values[p] = a.values[p] + b.values[p] - 0.5 * c.values[p];
  }

  auto integrate_trace = [&](const GridField& f, const std::vector<Rational>& trace) {
    double sum = 0.0;
    for (std::size_t p = 0; p < size(); ++p)
      for (std::size_t c = 0; c < l; ++c) sum += trace[c].get_d() * f(p, c);
    return 0.5 * sum * dx;
  };

  DiagnosticRecord r;
  r.t = t_;
  for (const auto& t : traces_) {
    r.h1.push_back(integrate_trace(mu, t.trace));
    if (with_h2) r.h2.push_back(integrate_trace(h2_density, t.trace));
  }
  if (initial_) {
    for (std::size_t i = 0; i < r.h1.size(); ++i) r.drift_h1.push_back(relative_drift(r.h1[i], initial_->h1[i]));
    for (std::size_t i = 0; i < r.h2.size(); ++i) r.drift_h2.push_back(relative_drift(r.h2[i], initial_->h2[i]));
  } else {
    r.drift_h1.assign(r.h1.size(), 0.0);
    r.drift_h2.assign(r.h2.size(), 0.0);
  }
  return r;
}

TimeSeries run(Solver& solver, const RunSpec& spec,
               const std::function<void(const Solver&, const DiagnosticRecord&)>& on_record) {
  if (!(spec.dt > 0.0) || !std::isfinite(spec.dt)) throw std::invalid_argument("dt must be positive");
  if (!(spec.t_end > 0.0) || !std::isfinite(spec.t_end)) throw std::invalid_argument("t_end must be positive");
  if (spec.every == 0) throw std::invalid_argument("output interval must be at least one step");

  TimeSeries series;
  for (const auto& t : solver.traces()) series.trace_names.push_back(t.name);
  series.has_h2 = solver.equation().order() <= 1;

  auto record = [&] {
    series.records.push_back(solver.diagnostics());
    if (on_record) on_record(solver, series.records.back());
  };

  const double t0 = solver.time();
  const auto steps = static_cast<std::size_t>(std::ceil(spec.t_end / spec.dt - 1e-9));
  record();
  for (std::size_t s = 1; s <= steps; ++s) {
    const double target = s == steps ? t0 + spec.t_end : t0 + double(s) * spec.dt;
    double h = spec.dt;
    if (s == steps) {
      const double rest = target - (t0 + double(s - 1) * spec.dt);
      if (std::abs(rest - spec.dt) > 1e-9 * spec.dt) h = rest;
    }
    solver.step(h);
    solver.set_time(target);
    if (s % spec.every == 0 || s == steps) record();
  }
  return series;
}

namespace {

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_csv(std::ostream& out, const TimeSeries& series) {
  out << "# fvir " << kVersion << "\n";
  out << "t";
  for (const auto& n : series.trace_names) out << ",H1[" << n << "]";
  if (series.has_h2)
    for (const auto& n : series.trace_names) out << ",H2[" << n << "]";
  for (const auto& n : series.trace_names) out << ",drift_H1[" << n << "]";
  if (series.has_h2)
    for (const auto& n : series.trace_names) out << ",drift_H2[" << n << "]";
  out << "\n";
  for (const auto& r : series.records) {
    out << number(r.t);
    for (double v : r.h1) out << ',' << number(v);
    for (double v : r.h2) out << ',' << number(v);
    for (double v : r.drift_h1) out << ',' << number(v);
    for (double v : r.drift_h2) out << ',' << number(v);
    out << "\n";
  }
}

void write_fields_csv(std::ostream& out, const Solver& solver) {
  const std::size_t l = solver.dim();
  const Naming names = default_naming(l);
  const GridField m = solver.moment();
  const GridField u = solver.velocity();
  out << "# fvir " << kVersion << " t=" << number(solver.time()) << "\n";
  out << "x";
  for (std::size_t c = 0; c < l; ++c) out << ',' << names(field::kMoment, std::uint8_t(c));
  for (std::size_t c = 0; c < l; ++c) out << ',' << names(field::kVelocity, std::uint8_t(c));
  out << "\n";
  for (std::size_t p = 0; p < m.n; ++p) {
    out << number(m.x(p));
    for (std::size_t c = 0; c < l; ++c) out << ',' << number(m(p, c));
    for (std::size_t c = 0; c < l; ++c) out << ',' << number(u(p, c));
    out << "\n";
  }
}

}  // namespace fvir
