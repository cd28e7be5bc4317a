#pragma once

#include "fvir/algebra.hpp"
#include "fvir/diffpoly.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <memory>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace fvir::test {

inline ExactAlgebraPtr share(ExactAlgebra a) { return std::make_shared<const ExactAlgebra>(std::move(a)); }

inline std::string source_dir() { return FVIR_TEST_SOURCE_DIR; }
inline std::string config_path(const std::string& name) { return source_dir() + "/configs/" + name; }
inline std::string golden_path(const std::string& name) { return source_dir() + "/golden/" + name; }

/// The algebras every structural property is checked on.
inline std::vector<ExactAlgebraPtr> sample_algebras() {
  std::vector<ExactAlgebraPtr> out{share(builtin_R())};
  for (int eps : {-1, 0, 1, 2})
    for (int k : {1, 2}) out.push_back(share(builtin_Z2(Rational(eps), k)));
  out.push_back(share(builtin_Zl_top(3)));
  return out;
}

/// Random differential polynomial in the given field with up to `components`
/// components, jets of order ≤ max_order and degree ≤ max_degree.
inline DiffPoly random_diffpoly(std::mt19937& rng, std::uint8_t f, int components, int max_order, int max_degree,
                                int terms = 4) {
  std::uniform_int_distribution<int> comp(0, components - 1), order(0, max_order), degree(1, max_degree),
      coeff(-5, 5);
  DiffPoly p;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    const int d = degree(rng);
    for (int i = 0; i < d; ++i)
      m.push_back(Jet{f, static_cast<std::uint8_t>(comp(rng)), static_cast<std::uint8_t>(order(rng)), false});
    int c = coeff(rng);
    if (c == 0) c = 1;
    Rational q(c, 1 + (t % 3));
    q.canonicalize();
    p.add_term(std::move(m), q);
  }
  return p;
}

inline AlgDiffPoly random_alg_diffpoly(std::mt19937& rng, const ExactAlgebraPtr& alg, std::uint8_t f, int max_order,
                                       int max_degree) {
  std::vector<DiffPoly> comps;
  for (std::size_t k = 0; k < alg->dim(); ++k)
    comps.push_back(random_diffpoly(rng, f, int(alg->dim()), max_order, max_degree, 2));
  return AlgDiffPoly(alg, std::move(comps));
}

/// Independent complex-scalar KdV integrator ψ_t + 3ψψ_x + ψ_xxx = 0 with a
/// full complex FFT, 2/3-rule dealiasing of the quadratic term and the same
/// Lawson integrating-factor RK4 as the library.
class ComplexKdV {
 public:
  ComplexKdV(std::size_t n, double length) : n_(n), length_(length), buf_(n) {
    auto* p = reinterpret_cast<fftw_complex*>(buf_.data());
    fwd_ = fftw_plan_dft_1d(int(n), p, p, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd_ = fftw_plan_dft_1d(int(n), p, p, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  ~ComplexKdV() {
    fftw_destroy_plan(fwd_);
    fftw_destroy_plan(bwd_);
  }
  ComplexKdV(const ComplexKdV&) = delete;
  ComplexKdV& operator=(const ComplexKdV&) = delete;

  using Vec = std::vector<std::complex<double>>;

  Vec forward(const Vec& x) {
    buf_ = x;
    fftw_execute(fwd_);
    return buf_;
  }
  Vec backward(const Vec& x) {
    buf_ = x;
    fftw_execute(bwd_);
    for (auto& v : buf_) v /= double(n_);
    return buf_;
  }

  long signed_index(std::size_t j) const { return j <= n_ / 2 ? long(j) : long(j) - long(n_); }
  double kappa(std::size_t j) const { return 2.0 * std::numbers::pi * double(signed_index(j)) / length_; }
  bool kept(std::size_t j) const { return 3 * std::size_t(std::labs(signed_index(j))) < n_; }
  bool nyquist(std::size_t j) const { return 2 * j == n_; }

  /// −P(3ψψ_x) in Fourier space.
  Vec nonlinear(const Vec& hat) {
    Vec f(n_), fx(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      if (!kept(j)) continue;
      f[j] = hat[j];
      fx[j] = std::complex<double>(0.0, kappa(j)) * hat[j];
    }
    Vec psi = backward(f), psix = backward(fx);
    Vec prod(n_);
    for (std::size_t j = 0; j < n_; ++j) prod[j] = 3.0 * psi[j] * psix[j];
    Vec out = forward(prod);
    for (std::size_t j = 0; j < n_; ++j) out[j] = kept(j) ? -out[j] : 0.0;
    return out;
  }

  /// exp(iκ³h), identity at the Nyquist mode.
  std::complex<double> factor(std::size_t j, double h) const {
    if (nyquist(j)) return 1.0;
    const double k = kappa(j);
    return std::exp(std::complex<double>(0.0, k * k * k * h));
  }

  Vec step(const Vec& y, double h) {
    Vec e(n_), e2(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      e[j] = factor(j, h);
      e2[j] = factor(j, h / 2);
    }
    Vec k1 = nonlinear(y), a(n_);
    for (std::size_t j = 0; j < n_; ++j) a[j] = e2[j] * (y[j] + h / 2 * k1[j]);
    Vec k2 = nonlinear(a);
    for (std::size_t j = 0; j < n_; ++j) a[j] = e2[j] * y[j] + h / 2 * k2[j];
    Vec k3 = nonlinear(a);
    for (std::size_t j = 0; j < n_; ++j) a[j] = e[j] * y[j] + h * e2[j] * k3[j];
    Vec k4 = nonlinear(a);
    Vec out(n_);
    for (std::size_t j = 0; j < n_; ++j)
      out[j] = e[j] * y[j] + h / 6 * (e[j] * k1[j] + 2.0 * e2[j] * (k2[j] + k3[j]) + k4[j]);
    return out;
  }

  Vec run(const Vec& psi0, double dt, std::size_t steps) {
    Vec hat = forward(psi0);
    for (std::size_t s = 0; s < steps; ++s) hat = step(hat, dt);
    return backward(hat);
  }

 private:
  std::size_t n_;
  double length_;
  Vec buf_;
  fftw_plan fwd_;
  fftw_plan bwd_;
};

/// Polynomials in T = tanh(s(x − ct)) with rational coefficients, for checking
/// travelling-wave solutions exactly: d/dx T = s(1 − T²), d/dt T = −cs(1 − T²).
struct TanhPoly {
  std::vector<Rational> c;  // c[i] multiplies T^i

  static TanhPoly constant(const Rational& a) { return {{a}}; }
  static TanhPoly t() { return {{Rational(0), Rational(1)}}; }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const {
    for (const auto& x : c)
      if (x != 0) return false;
    return true;
  }
  friend TanhPoly operator+(TanhPoly a, const TanhPoly& b) {
    if (a.c.size() < b.c.size()) a.c.resize(b.c.size(), Rational(0));
    for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i] += b.c[i];
    a.trim();
    return a;
  }
  friend TanhPoly operator*(const Rational& k, TanhPoly a) {
    for (auto& x : a.c) x *= k;
    a.trim();
    return a;
  }
  friend TanhPoly operator*(const TanhPoly& a, const TanhPoly& b) {
    TanhPoly r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
  }
  /// (1 − T²) p'(T)
  TanhPoly chain() const {
    TanhPoly dp;
    for (std::size_t i = 1; i < c.size(); ++i) dp.c.push_back(Rational(long(i)) * c[i]);
    TanhPoly one_minus{{Rational(1), Rational(0), Rational(-1)}};
    return one_minus * dp;
  }
};

}  // namespace fvir::test
