#pragma once

#include <string>
#include <vector>

#include "fsw/dynamics.hpp"
#include "fsw/grid.hpp"

namespace fsw {

struct State {
  double t = 0.0;
  RealField eta;
};

enum class StopKind { reached_t_end, slope_threshold, energy_drift, nonfinite };

std::string to_string(StopKind k);
StopKind parse_stop_kind(const std::string& s);

struct StopReason {
  StopKind kind = StopKind::reached_t_end;
  double time = 0.0;
  std::string detail;

  bool operator==(const StopReason&) const = default;
};

struct SolverConfig {
  double t_end = 1.0;
  double dt_init = 1e-2;
  double cfl = 0.3;
  /// Stop once ||eta_x||_inf reaches this value (blow-up monitor).
  double slope_stop = 1e3;
  /// Stop once |H(t) - H(0)| / H(0) exceeds this value (absolute if H(0) = 0).
  /// Only the exact variant is monitored.
  double energy_drift_stop = 1e-4;
  int record_every = 1;
  /// Keep field snapshots at every recorded step.
  bool keep_snapshots = true;
  double sobolev_s = 1.75;
  RhsVariant variant;

  /// Throws std::invalid_argument on non-positive thresholds, dt_init > t_end,
  /// an inconsistent variant or a mollifier the grid cannot resolve.
  void validate(const GridSpec& grid) const;

  bool operator==(const SolverConfig&) const = default;
};

struct SeriesRow {
  double t = 0.0;
  double H = 0.0;
  double Hs_norm = 0.0;
  double linf_slope = 0.0;
  double inf_slope = 0.0;
  double sup_slope = 0.0;
  double xi_inf = 0.0;
  double xi_sup = 0.0;
  /// Trapezoidal integral of ||eta_x||_inf over [0, t], accumulated every step.
  double slope_integral = 0.0;

  bool operator==(const SeriesRow&) const = default;
};

struct Snapshot {
  double t = 0.0;
  RealField eta;

  bool operator==(const Snapshot&) const = default;
};

struct Trajectory {
  GridSpec grid{16, 1.0};
  std::vector<SeriesRow> series;
  std::vector<Snapshot> snapshots;
  StopReason stop;
  std::size_t steps = 0;
  double max_mass_drift = 0.0;
  double wall_time = 0.0;
};

State rk4_step(const State& state, double dt, const RhsVariant& variant);

/// min(dt_init, cfl dx / (1 + (7/2) ||eta||_inf)), capped so that t_end is hit exactly.
double choose_dt(const State& state, const SolverConfig& config);

/// Steps from t = 0 until t_end or a stop condition. Rows (and snapshots) are
/// recorded at step 0, every record_every-th step and at the final step.
Trajectory integrate(const RealField& eta0, const SolverConfig& config);

}  // namespace fsw
