#include "fsw/mollifier.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "fsw/kernels.hpp"
#include "fsw/spectral.hpp"

namespace fsw {

std::string to_string(MollifierVariant v) {
  return v == MollifierVariant::bump_convolution ? "bump_convolution" : "spectral_cutoff";
}

MollifierVariant parse_mollifier_variant(const std::string& s) {
  if (s == "bump_convolution") return MollifierVariant::bump_convolution;
  if (s == "spectral_cutoff") return MollifierVariant::spectral_cutoff;
  throw std::invalid_argument("unknown mollifier variant '" + s + "'");
}

void MollifierSpec::validate_for(const GridSpec& grid) const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("mollifier epsilon must be positive");
  }
  if (variant == MollifierVariant::bump_convolution) {
    if (epsilon < 4.0 * grid.dx()) {
      throw std::invalid_argument("bump mollifier support is under-resolved: epsilon " + std::to_string(epsilon) +
                                  " < 4 dx = " + std::to_string(4.0 * grid.dx()));
    }
    if (epsilon >= grid.half_length()) {
      throw std::invalid_argument("bump mollifier support exceeds half the period");
    }
  }
}

namespace {

double raw_bump(double x) {
  const double q = 1.0 - x * x;
  return q > 0.0 ? std::exp(-1.0 / q) : 0.0;
}

}  // namespace

double bump_normalization() {
  static const double z = [] {
    double error = 0.0;
    const double mass = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(raw_bump, -1.0, 1.0, 20,
                                                                                       1e-15, &error);
    return 1.0 / mass;
  }();
  return z;
}

double bump_profile(double x) { return bump_normalization() * raw_bump(x); }

double bump_fourier_transform(double w) {
  // Composite Gauss-Legendre with panels short against the oscillation period.
  using Gauss = boost::math::quadrature::gauss<double, 30>;
  const int panels = 8 + static_cast<int>(std::ceil(std::abs(w)));
  const double h = 2.0 / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double a = -1.0 + p * h;
    sum += Gauss::integrate([w](double x) { return bump_profile(x) * std::cos(w * x); }, a, a + h);
  }
  return sum;
}

const std::vector<double>& spectral_cutoff_symbol(const GridSpec& grid, double epsilon) {
  using Key = std::tuple<std::size_t, double, double>;
  static std::mutex mutex;
  static std::map<Key, std::vector<double>> cache;
  std::lock_guard lock(mutex);
  const Key key{grid.n(), grid.half_length(), epsilon};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<double> symbol(grid.n() / 2 + 1);
  for (std::size_t k = 0; k < symbol.size(); ++k) {
    symbol[k] = bump_fourier_transform(epsilon * grid.frequency(static_cast<std::ptrdiff_t>(k)));
  }
  return cache.emplace(key, std::move(symbol)).first->second;
}

RealField mollify(const RealField& f, const MollifierSpec& spec) {
  const GridSpec& g = f.grid();
  spec.validate_for(g);
  if (spec.variant == MollifierVariant::spectral_cutoff) {
    const auto& symbol = spectral_cutoff_symbol(g, spec.epsilon);
    return to_physical(apply_symbol(to_spectral(f), [&](double, std::size_t k) { return symbol[k]; }));
  }
  const double dx = g.dx();
  const auto reach = static_cast<std::ptrdiff_t>(std::floor(spec.epsilon / dx));
  std::vector<std::ptrdiff_t> offsets;
  std::vector<double> weights;
  double mass = 0.0;
  for (std::ptrdiff_t d = -reach; d <= reach; ++d) {
    const double w = dx * bump_profile(static_cast<double>(d) * dx / spec.epsilon) / spec.epsilon;
    if (w == 0.0) continue;
    offsets.push_back(d);
    weights.push_back(w);
    mass += w;
  }
  for (double& w : weights) w /= mass;
  std::vector<double> out(f.size());
  kernels::omp::sparse_circulant_apply(offsets, weights, f.samples(), out);
  return RealField(g, std::move(out));
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("loglog_slope needs two or more points");
  double mx = 0.0, my = 0.0;
  const auto n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

MollifierPropertyReport verify_mollifier_properties(const RealField& f, const MollifierSpec& spec,
                                                    const MollifierCheckOptions& options) {
  MollifierPropertyReport r;
  const RealField jf = mollify(f, spec);
  const double fmax = f.max_abs();
  r.linf_ratio = fmax > 0.0 ? jf.max_abs() / fmax : 0.0;
  r.linf_pass = r.linf_ratio <= 1.0 + options.linf_tolerance;

  const RealField fx = derivative(f, 1);
  r.commutation_defect = (derivative(jf, 1) - mollify(fx, spec)).max_abs();
  r.commutation_tolerance = spec.variant == MollifierVariant::spectral_cutoff
                                ? options.spectral_commutation_tolerance * std::max(1.0, fx.max_abs())
                                : spec.epsilon * spec.epsilon * fx.max_abs();
  r.commutation_pass = r.commutation_defect <= r.commutation_tolerance;

  r.ladder = options.ladder;
  std::vector<double> inverse_eps;
  std::vector<std::vector<double>> growth_norms(2);
  for (double eps : options.ladder) {
    const RealField j = mollify(f, MollifierSpec{eps, spec.variant});
    r.convergence_errors.push_back(sobolev_norm(j - f, options.m - 1));
    inverse_eps.push_back(1.0 / eps);
    for (int k = 1; k <= 2; ++k) growth_norms[k - 1].push_back(sobolev_norm(j, options.m + k));
  }
  r.convergence_order = loglog_slope(r.ladder, r.convergence_errors);
  r.convergence_pass = r.convergence_order >= options.order_low && r.convergence_order <= options.order_high;
  r.growth_pass = true;
  for (int k = 1; k <= 2; ++k) {
    const double e = loglog_slope(inverse_eps, growth_norms[k - 1]);
    r.growth_exponents.push_back(e);
    r.growth_pass = r.growth_pass && e <= k + options.growth_slack;
  }
  return r;
}

}  // namespace fsw
