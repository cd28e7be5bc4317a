#include "fvir/grid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fvir {

GridField::GridField(std::size_t n_, std::size_t dim_, double length_)
    : n(n_), dim(dim_), length(length_), values(n_ * dim_, 0.0) {
  if (n < 16 || (n & (n - 1)) != 0)
    throw std::invalid_argument("grid size must be a power of two >= 16, got " + std::to_string(n));
  if (dim == 0) throw std::invalid_argument("grid field needs at least one component");
  if (!(length > 0.0) || !std::isfinite(length)) throw std::invalid_argument("domain length must be positive");
}

double GridField::max_abs() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

bool GridField::all_finite() const {
  return std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); });
}

struct Fourier::Plans {
  fftw_plan r2c = nullptr;
  fftw_plan c2r = nullptr;
  ~Plans() {
    if (r2c) fftw_destroy_plan(r2c);
    if (c2r) fftw_destroy_plan(c2r);
  }
};

Fourier::Fourier(std::size_t n, std::size_t dim, double length)
    : n_(n), dim_(dim), length_(length), plans_(std::make_unique<Plans>()) {
  GridField probe(n, dim, length);  // validates the shape
  Spectrum spec(modes() * dim_);
  const int len = int(n_);
  const int howmany = int(dim_);
  const int stride = int(dim_);
  plans_->r2c = fftw_plan_many_dft_r2c(1, &len, howmany, probe.values.data(), nullptr, stride, 1,
                                       reinterpret_cast<fftw_complex*>(spec.data()), nullptr, stride, 1,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
  plans_->c2r = fftw_plan_many_dft_c2r(1, &len, howmany, reinterpret_cast<fftw_complex*>(spec.data()), nullptr,
                                       stride, 1, probe.values.data(), nullptr, stride, 1,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!plans_->r2c || !plans_->c2r) throw std::runtime_error("FFTW planning failed");
}

Fourier::~Fourier() = default;
Fourier::Fourier(Fourier&&) noexcept = default;
Fourier& Fourier::operator=(Fourier&&) noexcept = default;

double Fourier::wavenumber(std::size_t j) const { return 2.0 * std::numbers::pi * double(j) / length_; }

std::complex<double> Fourier::derivative_symbol(std::size_t j, int order) const {
  if (order % 2 != 0 && 2 * j == n_) return 0.0;
  return std::pow(std::complex<double>(0.0, wavenumber(j)), order);
}

Spectrum Fourier::forward(const GridField& f) const {
  if (f.n != n_ || f.dim != dim_) throw std::invalid_argument("grid field does not match the transform");
  Spectrum s(modes() * dim_);
  std::vector<double> in = f.values;
  fftw_execute_dft_r2c(plans_->r2c, in.data(), reinterpret_cast<fftw_complex*>(s.data()));
  return s;
}

GridField Fourier::inverse(const Spectrum& s) const {
  if (s.size() != modes() * dim_) throw std::invalid_argument("spectrum does not match the transform");
  GridField f(n_, dim_, length_);
  Spectrum work = s;
  fftw_execute_dft_c2r(plans_->c2r, reinterpret_cast<fftw_complex*>(work.data()), f.values.data());
  const double scale = 1.0 / double(n_);
  for (double& v : f.values) v *= scale;
  return f;
}

GridField spectral_derivative(const GridField& f, int order) {
  if (order < 1 || order > 3) throw std::invalid_argument("derivative order must be 1, 2 or 3");
  Fourier fourier(f.n, f.dim, f.length);
  Spectrum s = fourier.forward(f);
  for (std::size_t j = 0; j < fourier.modes(); ++j) {
    const auto factor = fourier.derivative_symbol(j, order);
    for (std::size_t c = 0; c < f.dim; ++c) s[j * f.dim + c] *= factor;
  }
  return fourier.inverse(s);
}

}  // namespace fvir
