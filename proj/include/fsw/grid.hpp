#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

namespace fsw {

/// Raised when a field or an intermediate quantity stops being finite.
/// The integrator converts it into a `nonfinite` stop.
class NumericalBreakdown : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Equispaced periodic grid on [-L, L) with n nodes.
class GridSpec {
 public:
  GridSpec(std::size_t n, double half_length);

  std::size_t n() const { return n_; }
  double half_length() const { return half_length_; }
  double period() const { return 2.0 * half_length_; }
  double dx() const { return dx_; }

  double node(std::size_t i) const { return -half_length_ + static_cast<double>(i) * dx_; }

  /// Physical frequency pi*k/L of integer wavenumber k.
  double frequency(std::ptrdiff_t k) const {
    return std::numbers::pi * static_cast<double>(k) / half_length_;
  }

  /// Maps x into [-L, L).
  double wrap(double x) const;

  std::vector<double> nodes() const;

  bool operator==(const GridSpec& other) const {
    return n_ == other.n_ && half_length_ == other.half_length_;
  }

 private:
  std::size_t n_;
  double half_length_;
  double dx_;
};

/// Samples of a real periodic function at the grid nodes. Immutable.
class RealField {
 public:
  /// Throws std::invalid_argument on a length mismatch and NumericalBreakdown
  /// on a non-finite sample.
  RealField(GridSpec grid, std::vector<double> samples);

  static RealField zeros(const GridSpec& grid);
  static RealField constant(const GridSpec& grid, double value);

  template <typename F>
  static RealField from_function(const GridSpec& grid, F&& f) {
    std::vector<double> s(grid.n());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = f(grid.node(i));
    return RealField(grid, std::move(s));
  }

  const GridSpec& grid() const { return grid_; }
  std::span<const double> samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  double operator[](std::size_t i) const { return samples_[i]; }

  /// a*this + b*other on the same grid.
  RealField combine(double a, const RealField& other, double b) const;
  RealField scaled(double a) const;

  /// Circular shift: result[i] = this[(i - shift) mod n].
  RealField shifted(std::ptrdiff_t shift) const;

  double max_abs() const;
  /// Trapezoidal integral over one period (exact for trigonometric polynomials
  /// of degree below n).
  double integral() const;

  bool operator==(const RealField& other) const {
    return grid_ == other.grid_ && samples_ == other.samples_;
  }

 private:
  GridSpec grid_;
  std::vector<double> samples_;
};

RealField operator+(const RealField& a, const RealField& b);
RealField operator-(const RealField& a, const RealField& b);
RealField operator*(double s, const RealField& a);

/// Fourier coefficients c_k, k = 0..n/2, normalized so that
/// f(x) = sum_k c_k exp(i*xi_k*(x + L)) over k in (-n/2, n/2] with c_{-k} = conj(c_k).
class SpectralField {
 public:
  SpectralField(GridSpec grid, std::vector<std::complex<double>> half_spectrum);

  const GridSpec& grid() const { return grid_; }
  std::span<const std::complex<double>> half_spectrum() const { return coeffs_; }

  /// Coefficient at any integer wavenumber in (-n/2, n/2].
  std::complex<double> coefficient(std::ptrdiff_t k) const;

 private:
  GridSpec grid_;
  std::vector<std::complex<double>> coeffs_;
};

}  // namespace fsw
