#pragma once

#include <string>
#include <vector>

#include "fsw/grid.hpp"

namespace fsw {

enum class MollifierVariant { bump_convolution, spectral_cutoff };

std::string to_string(MollifierVariant v);
MollifierVariant parse_mollifier_variant(const std::string& s);

struct MollifierSpec {
  double epsilon = 0.1;
  MollifierVariant variant = MollifierVariant::bump_convolution;

  /// Throws std::invalid_argument if epsilon is not positive, or if the bump
  /// support is not resolved on `grid` (epsilon < 4 dx) or wider than the period.
  void validate_for(const GridSpec& grid) const;

  bool operator==(const MollifierSpec&) const = default;
};

/// Normalization Z of the bump exp(-1/(1-x^2)) on (-1, 1), computed once by
/// adaptive Gauss-Kronrod quadrature.
double bump_normalization();

/// rho(x) = Z exp(-1/(1-x^2)) for |x| < 1, zero otherwise. Unit mass.
double bump_profile(double x);

/// Fourier transform integral of rho(x) exp(-i w x) dx (real, even in w).
double bump_fourier_transform(double w);

/// Multipliers rho_hat(eps * xi_k), k = 0..n/2, cached per (grid, eps).
const std::vector<double>& spectral_cutoff_symbol(const GridSpec& grid, double epsilon);

/// J_eps f. The bump variant is a periodic trapezoidal convolution with
/// eps^-1 rho(x/eps) whose discrete weights are rescaled to unit sum.
RealField mollify(const RealField& f, const MollifierSpec& spec);

struct MollifierPropertyReport {
  // (ii) ||J f||_inf / ||f||_inf
  double linf_ratio = 0.0;
  bool linf_pass = false;
  // (iii) ||d/dx J f - J d/dx f||_inf and the tolerance it was held to
  double commutation_defect = 0.0;
  double commutation_tolerance = 0.0;
  bool commutation_pass = false;
  // (iv) ||J_e f - f||_{H^{m-1}} along the epsilon ladder and the fitted order
  std::vector<double> ladder;
  std::vector<double> convergence_errors;
  double convergence_order = 0.0;
  bool convergence_pass = false;
  // (v) fitted exponent of ||J_e f||_{H^{m+k}} against 1/e, for k = 1, 2
  std::vector<double> growth_exponents;
  bool growth_pass = false;

  bool all_pass() const { return linf_pass && commutation_pass && convergence_pass && growth_pass; }
};

struct MollifierCheckOptions {
  int m = 2;
  std::vector<double> ladder{0.4, 0.2, 0.1, 0.05};
  double linf_tolerance = 1e-10;
  double spectral_commutation_tolerance = 1e-12;
  double order_low = 0.9;
  double order_high = 1.3;
  double growth_slack = 0.3;
};

/// Measures properties (ii)-(v) of J_eps on f. The ladder in `options` is run
/// with `spec.variant`; (ii) and (iii) use `spec` itself.
MollifierPropertyReport verify_mollifier_properties(const RealField& f, const MollifierSpec& spec,
                                                    const MollifierCheckOptions& options = {});

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace fsw
