#include "fsw/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fsw/kernels.hpp"

namespace fsw {

SpectralField derivative(const SpectralField& c, int order) {
  if (order < 1 || order > 3) throw std::invalid_argument("derivative order must be 1, 2 or 3");
  const std::size_t nyquist = c.grid().n() / 2;
  return apply_symbol(c, [order, nyquist](double xi, std::size_t k) -> std::complex<double> {
    if (k == nyquist && order % 2 == 1) return 0.0;
    switch (order) {
      case 1: return {0.0, xi};
      case 2: return {-xi * xi, 0.0};
      default: return {0.0, -xi * xi * xi};
    }
  });
}

RealField derivative(const RealField& f, int order) {
  return to_physical(derivative(to_spectral(f), order));
}

SpectralField helmholtz_inverse(const SpectralField& c) {
  return apply_symbol(c, [](double xi, std::size_t) { return std::complex<double>(1.0 / (1.0 + xi * xi)); });
}

RealField helmholtz_inverse(const RealField& f) { return to_physical(helmholtz_inverse(to_spectral(f))); }

double sobolev_norm(const SpectralField& c, double s) {
  if (!(s >= 0.0)) throw std::invalid_argument("Sobolev index must be non-negative");
  const auto& g = c.grid();
  const auto coeffs = c.half_spectrum();
  const std::size_t half = g.n() / 2;
  double sum = 0.0;
  for (std::size_t k = 0; k <= half; ++k) {
    const double xi = g.frequency(static_cast<std::ptrdiff_t>(k));
    const double weight = s == 0.0 ? 1.0 : std::pow(1.0 + xi * xi, s);
    const double multiplicity = (k == 0 || k == half) ? 1.0 : 2.0;
    sum += multiplicity * weight * std::norm(coeffs[k]);
  }
  return std::sqrt(sum * g.period());
}

double sobolev_norm(const RealField& f, double s) { return sobolev_norm(to_spectral(f), s); }

double energy(const RealField& f) {
  const double h1 = sobolev_norm(f, 1.0);
  return 0.5 * h1 * h1;
}

double evaluate(const SpectralField& c, double x) {
  return kernels::trig_eval_point(c.half_spectrum(), c.grid().half_length(), x);
}

std::vector<double> evaluate(const SpectralField& c, std::span<const double> points) {
  std::vector<double> out(points.size());
  kernels::omp::trig_eval(c.half_spectrum(), c.grid().half_length(), points, out);
  return out;
}

namespace {

double periodic_distance(const GridSpec& g, double a, double b) {
  return std::abs(g.wrap(a - b));
}

}  // namespace

SlopeExtremum extremum_slope(const RealField& f, ExtremumKind kind, std::optional<double> hint) {
  const GridSpec& g = f.grid();
  const SpectralField c = to_spectral(f);
  const SpectralField c1 = derivative(c, 1);
  const SpectralField c2 = derivative(c, 2);
  const SpectralField c3 = derivative(c, 3);
  const RealField slope = to_physical(c1);
  const auto s = slope.samples();

  // Work with a maximization problem throughout.
  const double sign = kind == ExtremumKind::sup ? 1.0 : -1.0;
  const auto [lo, hi] = std::minmax_element(s.begin(), s.end());
  const double scale = 1.0 + std::max(std::abs(*lo), std::abs(*hi));
  if (*hi - *lo <= 1e-13 * scale) {
    return {s[0], g.node(0), true};
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (sign * s[i] > sign * s[best]) best = i;
  }
  if (hint) {
    const double top = sign * s[best];
    double best_dist = periodic_distance(g, g.node(best), *hint);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (top - sign * s[i] <= 1e-9) {
        const double d = periodic_distance(g, g.node(i), *hint);
        if (d < best_dist) {
          best_dist = d;
          best = i;
        }
      }
    }
  }

  const double x0 = g.node(best);
  double x = x0;
  // Newton on f_xx = 0, confined to the two cells around the best node.
  for (int it = 0; it < 30; ++it) {
    const double curv = evaluate(c2, x);
    const double third = evaluate(c3, x);
    if (third == 0.0 || !std::isfinite(third)) break;
    const double step = curv / third;
    const double next = x - step;
    if (std::abs(next - x0) > g.dx()) break;
    x = next;
    if (std::abs(step) <= 1e-15 * std::max(1.0, g.half_length())) break;
  }
  double value = evaluate(c1, x);
  // The refinement can only improve on the node value.
  if (sign * value < sign * s[best]) {
    x = x0;
    value = s[best];
  }
  return {value, g.wrap(x), false};
}

namespace dealias {

std::vector<double> to_padded(std::span<const std::complex<double>> c, std::size_t m) {
  const std::size_t half = c.size() - 1;
  std::vector<std::complex<double>> padded(m / 2 + 1, 0.0);
  std::copy(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(half), padded.begin());
  std::vector<double> values(m);
  fft::inverse(padded, values);
  return values;
}

std::vector<std::complex<double>> from_padded(std::span<const double> values, std::size_t n) {
  const std::size_t m = values.size();
  std::vector<std::complex<double>> full(m / 2 + 1);
  fft::forward(values, full);
  std::vector<std::complex<double>> out(n / 2 + 1, 0.0);
  const double inv = 1.0 / static_cast<double>(m);
  for (std::size_t k = 0; k < n / 2; ++k) out[k] = full[k] * inv;
  return out;
}

}  // namespace dealias

}  // namespace fsw
