#pragma once

// Periodic grids on [0, L) carrying algebra-valued samples, and their
// discrete Fourier transforms (FFTW, all components in one batched plan).

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

namespace fvir {

/// N samples x_j = jL/N of an l-component field, row-major (row = point).
struct GridField {
  std::size_t n = 0;
  std::size_t dim = 0;
  double length = 0.0;
  std::vector<double> values;

  GridField() = default;
  /// Throws std::invalid_argument unless N ≥ 16 is a power of two, dim ≥ 1
  /// and L > 0.
  GridField(std::size_t n, std::size_t dim, double length);

  double& operator()(std::size_t j, std::size_t c) { return values[j * dim + c]; }
  double operator()(std::size_t j, std::size_t c) const { return values[j * dim + c]; }
  double x(std::size_t j) const { return length * double(j) / double(n); }
  double max_abs() const;
  bool all_finite() const;
};

/// Half spectrum: (N/2 + 1) modes × dim components, row-major.
using Spectrum = std::vector<std::complex<double>>;

class Fourier {
 public:
  Fourier(std::size_t n, std::size_t dim, double length);
  ~Fourier();
  Fourier(const Fourier&) = delete;
  Fourier& operator=(const Fourier&) = delete;
  Fourier(Fourier&&) noexcept;
  Fourier& operator=(Fourier&&) noexcept;

  std::size_t size() const { return n_; }
  std::size_t dim() const { return dim_; }
  double length() const { return length_; }
  std::size_t modes() const { return n_ / 2 + 1; }
  /// κ_j = 2πj/L
  double wavenumber(std::size_t j) const;
  /// 2/3 rule: mode j survives iff 3j < N.
  bool retained(std::size_t j) const { return 3 * j < n_; }
  /// (iκ)^order, zero at the Nyquist mode for odd orders.
  std::complex<double> derivative_symbol(std::size_t j, int order) const;

  Spectrum forward(const GridField& f) const;
  /// Normalized inverse: inverse(forward(f)) = f.
  GridField inverse(const Spectrum& s) const;

 private:
  struct Plans;
  std::size_t n_;
  std::size_t dim_;
  double length_;
  std::unique_ptr<Plans> plans_;
};

/// order-th x-derivative of a periodic field (order 1, 2 or 3).
GridField spectral_derivative(const GridField& f, int order);

}  // namespace fvir
