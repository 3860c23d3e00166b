#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "fsw/fft.hpp"
#include "fsw/grid.hpp"

namespace fsw {

/// Multiplies coefficient k by symbol(xi_k) for k = 0..n/2. `symbol` receives
/// the physical frequency and the index.
template <typename Symbol>
SpectralField apply_symbol(const SpectralField& c, Symbol&& symbol) {
  const auto& g = c.grid();
  std::vector<std::complex<double>> out(c.half_spectrum().begin(), c.half_spectrum().end());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] *= symbol(g.frequency(static_cast<std::ptrdiff_t>(k)), k);
  }
  return SpectralField(g, std::move(out));
}

/// Spectral derivative of order 1, 2 or 3. Odd orders zero the Nyquist mode.
RealField derivative(const RealField& f, int order);
SpectralField derivative(const SpectralField& c, int order);

/// (1 - d^2/dx^2)^{-1} f, i.e. coefficient k divided by 1 + xi_k^2.
RealField helmholtz_inverse(const RealField& f);
SpectralField helmholtz_inverse(const SpectralField& c);

/// ||f||_{H^s}, with the L^2 normalization ||f||_{H^0}^2 = integral of f^2 over one period.
double sobolev_norm(const RealField& f, double s);
double sobolev_norm(const SpectralField& c, double s);

/// (1/2) * integral of (f^2 + f_x^2), evaluated as half the squared H^1 norm.
double energy(const RealField& f);

enum class ExtremumKind { inf, sup };

struct SlopeExtremum {
  double value = 0.0;
  double location = 0.0;
  bool degenerate = false;
};

/// Extremal value of f_x and its location. The best node is refined by Newton
/// iteration on the interpolant of f_xx. When global extrema tie within 1e-9,
/// the one closest to `hint` (periodic distance) is chosen. A field with
/// constant slope returns its slope at the leftmost node with `degenerate` set.
SlopeExtremum extremum_slope(const RealField& f, ExtremumKind kind, std::optional<double> hint = std::nullopt);

/// Value of the trigonometric interpolant of c at x.
double evaluate(const SpectralField& c, double x);

/// Interpolated values of c at many points (threaded).
std::vector<double> evaluate(const SpectralField& c, std::span<const double> points);

namespace dealias {

/// Size of the padded grid used for products up to fifth degree.
inline std::size_t padded_size(std::size_t n) { return 3 * n; }

/// Values on an m-point grid of the interpolant with half spectrum c (Nyquist dropped).
std::vector<double> to_padded(std::span<const std::complex<double>> c, std::size_t m);

/// Normalized half spectrum (length n/2+1, Nyquist zero) of the lowest modes of
/// samples on an m-point grid.
std::vector<std::complex<double>> from_padded(std::span<const double> values, std::size_t n);

}  // namespace dealias

}  // namespace fsw
