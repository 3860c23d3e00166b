#include "fsw/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fsw::kernels {
namespace {

// Below this many output entries the OpenMP variants run on one thread.
constexpr std::ptrdiff_t kParallelThreshold = 4096;

inline std::size_t wrap_index(std::ptrdiff_t i, std::ptrdiff_t n) {
  return static_cast<std::size_t>(((i % n) + n) % n);
}

inline double circulant_entry(std::span<const double> w, std::span<const double> f, std::size_t i) {
  const std::size_t n = f.size();
  double s = 0.0;
  // Two contiguous runs avoid a modulo per term.
  std::size_t d = 0;
  for (; i + d < n; ++d) s += w[d] * f[i + d];
  for (; d < n; ++d) s += w[d] * f[i + d - n];
  return s;
}

inline double sparse_entry(std::span<const std::ptrdiff_t> offsets, std::span<const double> w,
                           std::span<const double> f, std::ptrdiff_t i) {
  const auto n = static_cast<std::ptrdiff_t>(f.size());
  double s = 0.0;
  for (std::size_t m = 0; m < offsets.size(); ++m) s += w[m] * f[wrap_index(i + offsets[m], n)];
  return s;
}

inline void poly_entry(double u, double ux, const PolynomialCoefficients& c, double& sq, double& poly) {
  const double u2 = u * u;
  sq = u2;
  poly = c.c2 * u2 + c.cx2 * ux * ux + c.c3 * u2 * u + c.c4 * u2 * u2;
}

}  // namespace

double trig_eval_point(std::span<const std::complex<double>> coeffs, double half_length, double x) {
  const std::size_t half = coeffs.size() - 1;
  const double theta = std::numbers::pi * (x + half_length) / half_length;
  double s = coeffs[0].real();
  const std::complex<double> step = std::polar(1.0, theta);
  std::complex<double> z = step;
  for (std::size_t k = 1; k < half; ++k) {
    // Re-anchor the rotation periodically to keep the phase error at rounding level.
    if (k % 32 == 0) z = std::polar(1.0, static_cast<double>(k) * theta);
    s += 2.0 * (coeffs[k].real() * z.real() - coeffs[k].imag() * z.imag());
    z *= step;
  }
  s += coeffs[half].real() * std::cos(static_cast<double>(half) * theta);
  return s;
}

LagrangeValue lagrange_eval(std::span<const double> samples, double x0, double dx, double x, int points) {
  if (points < 2 || points > 32 || points % 2 != 0) throw std::invalid_argument("stencil must be even, 2..32");
  const auto n = static_cast<std::ptrdiff_t>(samples.size());
  if (n < points) throw std::invalid_argument("fewer samples than stencil points");
  const double u = (x - x0) / dx;
  const double base = std::floor(u);
  const std::ptrdiff_t first = static_cast<std::ptrdiff_t>(base) - points / 2 + 1;
  // Position inside the stencil in grid units; node k sits at k.
  const double s = (u - base) + static_cast<double>(points / 2 - 1);
  double r[32];
  int near = 0;
  for (int k = 0; k < points; ++k) {
    r[k] = s - static_cast<double>(k);
    if (std::abs(r[k]) < std::abs(r[near])) near = k;
  }
  // Products and sums that skip the nearest node never divide by a tiny offset.
  double E = 1.0, S = 0.0;
  for (int k = 0; k < points; ++k) {
    if (k == near) continue;
    E *= r[k];
    S += 1.0 / r[k];
  }
  double value = 0.0, slope = 0.0;
  double lambda = (points % 2 == 0 ? -1.0 : 1.0);  // (-1)^(points-1-j) / (j! (points-1-j)!) at j = 0
  for (int k = 1; k < points; ++k) lambda /= static_cast<double>(k);
  for (int j = 0; j < points; ++j) {
    const double f = samples[wrap_index(first + j, n)];
    double l, dl;
    if (j == near) {
      l = lambda * E;
      dl = lambda * E * S;
    } else {
      l = lambda * E * r[near] / r[j];
      dl = lambda * (E * r[near] / r[j] * (S - 1.0 / r[j]) + E / r[j]);
    }
    value += f * l;
    slope += f * dl;
    lambda *= -static_cast<double>(points - 1 - j) / static_cast<double>(j + 1);
  }
  return {value, slope / dx};
}

double lagrange_eval_point(std::span<const double> samples, double x0, double dx, double x, int points) {
  return lagrange_eval(samples, x0, dx, x, points).value;
}

namespace serial {

void circulant_apply(std::span<const double> weights, std::span<const double> f, std::span<double> out) {
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = circulant_entry(weights, f, i);
}

void sparse_circulant_apply(std::span<const std::ptrdiff_t> offsets, std::span<const double> weights,
                            std::span<const double> f, std::span<double> out) {
  const auto n = static_cast<std::ptrdiff_t>(f.size());
  for (std::ptrdiff_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = sparse_entry(offsets, weights, f, i);
}

void polynomial_terms(std::span<const double> u, std::span<const double> ux, const PolynomialCoefficients& c,
                      std::span<double> square, std::span<double> poly) {
  for (std::size_t i = 0; i < u.size(); ++i) poly_entry(u[i], ux[i], c, square[i], poly[i]);
}

void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
}

void trig_eval(std::span<const std::complex<double>> coeffs, double half_length, std::span<const double> points,
               std::span<double> out) {
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = trig_eval_point(coeffs, half_length, points[i]);
}

}  // namespace serial

namespace omp {

void circulant_apply(std::span<const double> weights, std::span<const double> f, std::span<double> out) {
  const auto n = static_cast<std::ptrdiff_t>(f.size());
  // O(n^2): worth threading far below the pointwise threshold.
#pragma omp parallel for schedule(static) if (n >= 256)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = circulant_entry(weights, f, static_cast<std::size_t>(i));
  }
}

void sparse_circulant_apply(std::span<const std::ptrdiff_t> offsets, std::span<const double> weights,
                            std::span<const double> f, std::span<double> out) {
  const auto n = static_cast<std::ptrdiff_t>(f.size());
#pragma omp parallel for schedule(static) if (n * static_cast<std::ptrdiff_t>(offsets.size()) >= kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = sparse_entry(offsets, weights, f, i);
}

void polynomial_terms(std::span<const double> u, std::span<const double> ux, const PolynomialCoefficients& c,
                      std::span<double> square, std::span<double> poly) {
  const auto n = static_cast<std::ptrdiff_t>(u.size());
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto j = static_cast<std::size_t>(i);
    poly_entry(u[j], ux[j], c, square[j], poly[j]);
  }
}

void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  const auto n = static_cast<std::ptrdiff_t>(a.size());
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto j = static_cast<std::size_t>(i);
    out[j] = a[j] * b[j];
  }
}

void trig_eval(std::span<const std::complex<double>> coeffs, double half_length, std::span<const double> points,
               std::span<double> out) {
  const auto m = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(static) if (m * static_cast<std::ptrdiff_t>(coeffs.size()) >= 65536)
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    const auto j = static_cast<std::size_t>(i);
    out[j] = trig_eval_point(coeffs, half_length, points[j]);
  }
}

}  // namespace omp
}  // namespace fsw::kernels
