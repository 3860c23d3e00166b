#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fsw/breaking.hpp"
#include "fsw/harness/config.hpp"
#include "fsw/harness/record_io.hpp"

namespace fsw {

/// Integrates the configured initial data. With `persist`, the record is
/// written to config.output_dir.
RunRecord run_simulation(const ExperimentConfig& config, bool persist = true);

enum class LadderKind { spatial, temporal, mollifier };

std::string to_string(LadderKind k);
LadderKind parse_ladder_kind(const std::string& s);

struct ConvergenceReport {
  LadderKind kind = LadderKind::temporal;
  /// n, dt or epsilon of each ladder member, coarse to fine.
  std::vector<double> parameters;
  std::vector<double> errors;
  /// Successive ratios errors[i] / errors[i+1].
  std::vector<double> ratios;
  /// Least-squares log-log slope of error against parameter (temporal,
  /// mollifier); NaN for the spatial ladder.
  double fitted_order = 0.0;
  bool strictly_decreasing = false;
  bool pass = false;
  std::string reference;

  std::string table() const;
};

struct ConvergenceOptions {
  /// Temporal ladder: dt_init, dt_init/2, ... (levels members), reference at dt_init/reference_divisor.
  int temporal_levels = 3;
  double reference_divisor = 32.0;
  double order_target = 4.0;
  double order_slack = 0.3;
  /// Spatial ladder: n/4, n/2, n against 2n. Pairs whose finer error is below
  /// `roundoff_floor` times ||eta0||_inf do not count.
  double spatial_ratio = 10.0;
  double roundoff_floor = 1e-12;
  /// Mollifier ladder, run with mollifier_kind (mollified_B unless the config
  /// already selects a mollified variant).
  std::vector<double> epsilons{0.4, 0.2, 0.1, 0.05};
  std::optional<RhsKind> mollifier_kind;
  MollifierVariant mollifier_variant = MollifierVariant::spectral_cutoff;
};

/// Runs the ladder with share-nothing parallel members and, with `persist`,
/// writes convergence_<kind>.csv into config.output_dir.
ConvergenceReport convergence_study(const ExperimentConfig& config, LadderKind ladder,
                                    const ConvergenceOptions& options = {}, bool persist = true);

struct EquivalenceReport {
  std::vector<double> times;
  std::vector<double> residual_inf;
  std::vector<double> eta_t_inf;
  double tolerance_factor = 1e-8;
  bool pass = false;

  /// Largest residual_inf / (1 + eta_t_inf).
  double worst_ratio() const;
};

/// Residual of the third-order form at `checks` snapshots spread over a run of
/// the config (t = 0 first). Persists equivalence.csv and residual_<i>.csv.
EquivalenceReport equivalence_check(const ExperimentConfig& config, std::size_t checks = 5, bool persist = true);

struct SweepRow {
  double amplitude = 0.0;
  BreakingPrediction sup;
  BreakingPrediction inf;
  std::optional<StopReason> stop;
  double final_slope_integral = 0.0;
  /// Recorded sup slopes below the envelope by more than 0.1% (before T0).
  std::size_t envelope_violations = 0;
  /// min of dM/dt - (7/2) M^2 + C0; NaN if the record was too sparse.
  double riccati_margin = 0.0;
  std::string error;
};

inline constexpr const char* kSweepHeader =
    "amplitude,h1_norm,C0,threshold,M0_sup,hypothesis_sup,sigma_sup,T0_sup,M0_inf,hypothesis_inf,stop,stop_time,"
    "slope_integral,envelope_violations,riccati_margin,error";

/// One run per amplitude (in parallel), rows in input order. Failed runs are
/// recorded in the row's error column. Persists sweep.csv and each run under
/// amplitude_<i>/.
std::vector<SweepRow> breaking_sweep(const ExperimentConfig& base, const std::vector<double>& amplitudes,
                                     bool persist = true);

std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Count of recorded sup slopes below riccati_envelope by more than `rel`
/// relative, over records before T0.
std::size_t envelope_violations(const Trajectory& run, const BreakingPrediction& pred, double rel = 1e-3);

}  // namespace fsw
