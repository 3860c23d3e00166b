#include "fsw/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fsw {

GridSpec::GridSpec(std::size_t n, double half_length) : n_(n), half_length_(half_length) {
  if (n < 16 || n % 2 != 0) {
    throw std::invalid_argument("grid size must be even and at least 16, got " + std::to_string(n));
  }
  if (!(half_length > 0.0) || !std::isfinite(half_length)) {
    throw std::invalid_argument("grid half length must be positive and finite");
  }
  dx_ = 2.0 * half_length_ / static_cast<double>(n_);
}

double GridSpec::wrap(double x) const {
  const double p = period();
  double y = std::fmod(x + half_length_, p);
  if (y < 0.0) y += p;
  if (y >= p) y -= p;
  return y - half_length_;
}

std::vector<double> GridSpec::nodes() const {
  std::vector<double> x(n_);
  for (std::size_t i = 0; i < n_; ++i) x[i] = node(i);
  return x;
}

RealField::RealField(GridSpec grid, std::vector<double> samples)
    : grid_(grid), samples_(std::move(samples)) {
  if (samples_.size() != grid_.n()) {
    throw std::invalid_argument("field has " + std::to_string(samples_.size()) +
                                " samples but the grid has " + std::to_string(grid_.n()));
  }
  for (double v : samples_) {
    if (!std::isfinite(v)) throw NumericalBreakdown("non-finite sample in field");
  }
}

RealField RealField::zeros(const GridSpec& grid) {
  return RealField(grid, std::vector<double>(grid.n(), 0.0));
}

RealField RealField::constant(const GridSpec& grid, double value) {
  return RealField(grid, std::vector<double>(grid.n(), value));
}

RealField RealField::combine(double a, const RealField& other, double b) const {
  if (!(grid_ == other.grid_)) throw std::invalid_argument("fields live on different grids");
  std::vector<double> out(samples_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a * samples_[i] + b * other.samples_[i];
  return RealField(grid_, std::move(out));
}

RealField RealField::scaled(double a) const {
  std::vector<double> out(samples_);
  for (double& v : out) v *= a;
  return RealField(grid_, std::move(out));
}

RealField RealField::shifted(std::ptrdiff_t shift) const {
  const auto n = static_cast<std::ptrdiff_t>(samples_.size());
  std::vector<double> out(samples_.size());
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(((i + shift) % n + n) % n)] = samples_[static_cast<std::size_t>(i)];
  }
  return RealField(grid_, std::move(out));
}

double RealField::max_abs() const {
  double m = 0.0;
  for (double v : samples_) m = std::max(m, std::abs(v));
  return m;
}

double RealField::integral() const {
  double s = 0.0;
  for (double v : samples_) s += v;
  return s * grid_.dx();
}

RealField operator+(const RealField& a, const RealField& b) { return a.combine(1.0, b, 1.0); }
RealField operator-(const RealField& a, const RealField& b) { return a.combine(1.0, b, -1.0); }
RealField operator*(double s, const RealField& a) { return a.scaled(s); }

SpectralField::SpectralField(GridSpec grid, std::vector<std::complex<double>> half_spectrum)
    : grid_(grid), coeffs_(std::move(half_spectrum)) {
  if (coeffs_.size() != grid_.n() / 2 + 1) {
    throw std::invalid_argument("half spectrum must hold n/2+1 coefficients");
  }
}

std::complex<double> SpectralField::coefficient(std::ptrdiff_t k) const {
  const auto half = static_cast<std::ptrdiff_t>(grid_.n() / 2);
  if (k <= -half || k > half) throw std::out_of_range("wavenumber outside (-n/2, n/2]");
  return k >= 0 ? coeffs_[static_cast<std::size_t>(k)] : std::conj(coeffs_[static_cast<std::size_t>(-k)]);
}

}  // namespace fsw
