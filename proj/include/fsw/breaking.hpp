#pragma once

#include <optional>
#include <vector>

#include "fsw/integrator.hpp"
#include "fsw/spectral.hpp"

namespace fsw {

/// C0 = 1/2 + 3 h1^2 + (3/16) h1^3 + (3/32) h1^4.
double breaking_constant(double h1_norm);

struct BreakingPrediction {
  double h1_norm = 0.0;
  double C0 = 0.5;
  ExtremumKind kind = ExtremumKind::sup;
  double M0 = 0.0;
  double x0 = 0.0;
  bool hypothesis_ok = false;
  /// Present only when hypothesis_ok.
  std::optional<double> sigma;
  std::optional<double> T0_bound;

  /// sqrt(2 C0 / 7), the slope the hypothesis asks M0 to exceed.
  double threshold() const;
};

/// Builds a prediction from given numbers; `predict` feeds it measured ones.
BreakingPrediction make_prediction(double h1_norm, double M0, double x0, ExtremumKind kind);

BreakingPrediction predict(const RealField& eta0, ExtremumKind kind = ExtremumKind::sup);

/// M0 / (1 - (7 (1 - sigma) / 2) t M0). Throws std::invalid_argument without
/// the hypothesis, for t < 0, or at and beyond the pole T0_bound.
double riccati_envelope(const BreakingPrediction& pred, double t);

struct SlopeTrace {
  std::vector<double> times;
  std::vector<double> M;
  std::vector<double> xi;
  std::vector<double> f_at_xi;
  std::vector<double> riccati_rhs;
  /// f_functional_complete at xi and (7/2) M^2 + that value.
  std::vector<double> f_complete_at_xi;
  std::vector<double> riccati_rhs_complete;
};

struct SlopeDynamicsReport {
  SlopeTrace trace;
  ExtremumKind kind = ExtremumKind::sup;
  double C0 = 0.5;
  /// Centered differences of M on the nonuniform record; entries 0 and last are NaN.
  std::vector<double> dMdt;
  /// |dM/dt - riccati_rhs| / (1 + |dM/dt|) at interior snapshots (first and last NaN).
  std::vector<double> identity_error;
  std::vector<double> identity_error_complete;
  double identity_tolerance = 1e-3;
  double identity_pass_fraction = 0.0;
  double identity_pass_fraction_complete = 0.0;
  /// min over interior snapshots of dM/dt - (7/2) M^2 + C0.
  double riccati_margin = 0.0;
  bool riccati_pass = false;
  /// min over snapshots of f_at_xi + C0.
  double f_lower_margin = 0.0;
  std::size_t interior_count = 0;
};

/// Rebuilds M(t), xi(t) and f(t, xi(t)) from the snapshots of `run` and compares
/// finite-difference slopes with the pointwise identity and the Riccati
/// inequality. Throws std::invalid_argument when snapshots are missing or the
/// largest gap between records exceeds 1e-3 of the recorded span.
SlopeDynamicsReport slope_dynamics_check(const Trajectory& run, ExtremumKind kind = ExtremumKind::sup,
                                         double identity_tolerance = 1e-3);

struct CharacteristicSet {
  std::vector<double> seeds;
  std::vector<double> times;
  /// trajectories[s][i] = q(times[i], seeds[s]), wrapped into [-L, L).
  std::vector<std::vector<double>> trajectories;
  /// Unwrapped positions, used for flow-map monotonicity checks.
  std::vector<std::vector<double>> unwrapped;
  std::vector<std::vector<double>> jacobians;

  double min_jacobian() const;
};

/// Integrates dq/dt = eta(t, q) with RK4 (`substeps` per snapshot interval),
/// interpolating eta with a 12-point local stencil in x and linearly in t. q_x
/// is integrated alongside as exp of the path integral of the interpolant's slope.
CharacteristicSet advance_characteristics(const Trajectory& run, const std::vector<double>& seeds, int substeps = 4);

}  // namespace fsw
