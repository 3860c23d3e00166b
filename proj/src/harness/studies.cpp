#include "fsw/harness/studies.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "fsw/harness/initial_data.hpp"
#include "fsw/mollifier.hpp"
#include "fsw/spectral.hpp"

namespace fsw {

RunRecord run_simulation(const ExperimentConfig& config, bool persist) {
  config.validate();
  RunRecord rec{config, integrate(make_initial_data(config.initial, config.grid), config.solver)};
  if (persist) write_record(rec, config.output_dir);
  return rec;
}

std::string to_string(LadderKind k) {
  switch (k) {
    case LadderKind::spatial: return "spatial";
    case LadderKind::temporal: return "temporal";
    case LadderKind::mollifier: return "mollifier";
  }
  throw std::invalid_argument("bad LadderKind");
}

LadderKind parse_ladder_kind(const std::string& s) {
  for (auto k : {LadderKind::spatial, LadderKind::temporal, LadderKind::mollifier}) {
    if (to_string(k) == s) return k;
  }
  throw std::invalid_argument("unknown ladder '" + s + "'");
}

std::string ConvergenceReport::table() const {
  std::ostringstream os;
  os << "parameter,error,ratio\n";
  for (std::size_t i = 0; i < parameters.size(); ++i) {
    os << format_double(parameters[i]) << ',' << format_double(errors[i]) << ',';
    if (i > 0) os << format_double(ratios[i - 1]);
    os << '\n';
  }
  return os.str();
}

namespace {

// Final field of a run with fixed step `dt` (the CFL bound is disabled).
// Only the initial and final states are recorded.
RealField fixed_step_final(const RealField& eta0, SolverConfig solver, double dt) {
  solver.dt_init = dt;
  solver.cfl = std::numeric_limits<double>::max();
  solver.keep_snapshots = true;
  solver.record_every = std::numeric_limits<int>::max();
  const Trajectory run = integrate(eta0, solver);
  if (run.stop.kind != StopKind::reached_t_end) {
    throw std::runtime_error("ladder member stopped early: " + to_string(run.stop.kind) + " " + run.stop.detail);
  }
  return run.snapshots.back().eta;
}

// Runs body(0..count-1) in parallel; the first failure (by index) is rethrown after the join.
template <typename Body>
void parallel_members(std::size_t count, Body&& body) {
  std::vector<std::exception_ptr> errors(count);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < count; ++i) {
    try {
      body(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

double l2(const RealField& f) { return sobolev_norm(f, 0.0); }

void finish(ConvergenceReport& r) {
  r.ratios.clear();
  r.strictly_decreasing = true;
  for (std::size_t i = 0; i + 1 < r.errors.size(); ++i) {
    r.ratios.push_back(r.errors[i] / r.errors[i + 1]);
    if (!(r.errors[i + 1] < r.errors[i])) r.strictly_decreasing = false;
  }
}

}  // namespace

ConvergenceReport convergence_study(const ExperimentConfig& config, LadderKind ladder,
                                    const ConvergenceOptions& options, bool persist) {
  config.validate();
  ConvergenceReport r;
  r.kind = ladder;
  const SolverConfig& base = config.solver;

  if (ladder == LadderKind::temporal) {
    const RealField eta0 = make_initial_data(config.initial, config.grid);
    const int levels = options.temporal_levels;
    r.parameters.resize(static_cast<std::size_t>(levels));
    for (int i = 0; i < levels; ++i) r.parameters[static_cast<std::size_t>(i)] = base.dt_init / std::pow(2.0, i);
    const double dt_ref = base.dt_init / options.reference_divisor;
    r.reference = "dt=" + format_double(dt_ref);
    std::vector<std::optional<RealField>> finals(static_cast<std::size_t>(levels) + 1);
    const auto lv = static_cast<std::size_t>(levels);
    parallel_members(lv + 1, [&](std::size_t i) {
      finals[i] = fixed_step_final(eta0, base, i == lv ? dt_ref : r.parameters[i]);
    });
    for (int i = 0; i < levels; ++i) r.errors.push_back(l2(*finals[static_cast<std::size_t>(i)] - *finals.back()));
    finish(r);
    r.fitted_order = loglog_slope(r.parameters, r.errors);
    r.pass = r.strictly_decreasing && std::abs(r.fitted_order - options.order_target) <= options.order_slack;
  } else if (ladder == LadderKind::spatial) {
    const std::size_t n = config.grid.n();
    const std::vector<std::size_t> sizes{n / 4, n / 2, n, 2 * n};
    const GridSpec ref_grid(2 * n, config.grid.half_length());
    const RealField ref0 = make_initial_data(config.initial, ref_grid);
    const double dt = std::min(base.dt_init, base.cfl * ref_grid.dx() / (1.0 + 3.5 * ref0.max_abs()));
    r.reference = "n=" + std::to_string(2 * n) + " dt=" + format_double(dt);
    std::vector<std::optional<RealField>> finals(sizes.size());
    parallel_members(sizes.size(), [&](std::size_t i) {
      const GridSpec g(sizes[i], config.grid.half_length());
      finals[i] = fixed_step_final(make_initial_data(config.initial, g), base, dt);
    });
    const RealField& ref = *finals.back();
    for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
      const RealField& f = *finals[i];
      const std::size_t stride = 2 * n / sizes[i];
      double e = 0.0;
      for (std::size_t j = 0; j < f.size(); ++j) e = std::max(e, std::abs(f[j] - ref[j * stride]));
      r.parameters.push_back(static_cast<double>(sizes[i]));
      r.errors.push_back(e);
    }
    finish(r);
    r.fitted_order = std::numeric_limits<double>::quiet_NaN();
    const double floor = options.roundoff_floor * ref0.max_abs();
    std::size_t counted = 0;
    r.pass = true;
    for (std::size_t i = 0; i + 1 < r.errors.size(); ++i) {
      if (r.errors[i + 1] <= floor) continue;
      ++counted;
      r.pass = r.pass && r.ratios[i] >= options.spatial_ratio;
    }
    r.pass = r.pass && counted > 0;
  } else {
    const RealField eta0 = make_initial_data(config.initial, config.grid);
    RhsKind kind = options.mollifier_kind.value_or(RhsKind::mollified_B);
    if (!options.mollifier_kind && base.variant.kind != RhsKind::nonlocal_exact) kind = base.variant.kind;
    const double dt = std::min(base.dt_init, base.cfl * config.grid.dx() / (1.0 + 3.5 * eta0.max_abs()));
    r.parameters = options.epsilons;
    r.reference = "nonlocal_exact dt=" + format_double(dt) + " variant=" + to_string(kind);
    const std::size_t m = r.parameters.size();
    std::vector<std::optional<RealField>> finals(m + 1);
    parallel_members(m + 1, [&](std::size_t i) {
      SolverConfig s = base;
      s.variant = i == m ? RhsVariant::exact()
                         : RhsVariant::mollified(kind, MollifierSpec{r.parameters[i], options.mollifier_variant});
      finals[i] = fixed_step_final(eta0, s, dt);
    });
    for (std::size_t i = 0; i < m; ++i) r.errors.push_back(l2(*finals[i] - *finals.back()));
    finish(r);
    r.fitted_order = loglog_slope(r.parameters, r.errors);
    r.pass = r.strictly_decreasing && r.fitted_order > 0.0;
  }

  if (persist) {
    std::ostringstream os;
    os << r.table();
    write_text(config.output_dir / ("convergence_" + to_string(ladder) + ".csv"), os.str());
    std::ostringstream sm;
    sm << "ladder=" << to_string(ladder) << "\nreference=" << r.reference
       << "\nfitted_order=" << format_double(r.fitted_order) << "\nstrictly_decreasing=" << r.strictly_decreasing
       << "\npass=" << r.pass << '\n';
    write_text(config.output_dir / ("convergence_" + to_string(ladder) + "_summary.txt"), sm.str());
  }
  return r;
}

double EquivalenceReport::worst_ratio() const {
  double w = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i) w = std::max(w, residual_inf[i] / (1.0 + eta_t_inf[i]));
  return w;
}

EquivalenceReport equivalence_check(const ExperimentConfig& config, std::size_t checks, bool persist) {
  if (checks < 1) throw std::invalid_argument("equivalence_check needs at least one check");
  ExperimentConfig c = config;
  c.solver.keep_snapshots = true;
  const RunRecord rec = run_simulation(c, false);
  const auto& snaps = rec.run.snapshots;
  std::vector<std::size_t> picks;
  for (std::size_t k = 0; k < checks; ++k) {
    const std::size_t idx = checks == 1 ? 0 : k * (snaps.size() - 1) / (checks - 1);
    if (picks.empty() || picks.back() != idx) picks.push_back(idx);
  }
  EquivalenceReport r;
  std::ostringstream table;
  table << "t,residual_inf,eta_t_inf,ratio\n";
  for (std::size_t p = 0; p < picks.size(); ++p) {
    const RealField& eta = snaps[picks[p]].eta;
    const RealField res = third_order_residual(eta);
    const double eta_t = rhs(eta).max_abs();
    r.times.push_back(snaps[picks[p]].t);
    r.residual_inf.push_back(res.max_abs());
    r.eta_t_inf.push_back(eta_t);
    table << format_double(r.times.back()) << ',' << format_double(r.residual_inf.back()) << ','
          << format_double(eta_t) << ',' << format_double(r.residual_inf.back() / (1.0 + eta_t)) << '\n';
    if (persist) {
      std::string text = "x,residual\n";
      for (std::size_t j = 0; j < res.size(); ++j) {
        text += format_double(eta.grid().node(j)) + ',' + format_double(res[j]) + '\n';
      }
      write_text(config.output_dir / ("residual_" + std::to_string(p) + ".csv"), text);
    }
  }
  r.pass = r.worst_ratio() <= r.tolerance_factor;
  if (persist) write_text(config.output_dir / "equivalence.csv", table.str());
  return r;
}

std::size_t envelope_violations(const Trajectory& run, const BreakingPrediction& pred, double rel) {
  if (!pred.hypothesis_ok) return 0;
  std::size_t v = 0;
  for (const SeriesRow& row : run.series) {
    if (row.t >= *pred.T0_bound) break;
    const double env = riccati_envelope(pred, row.t);
    if (row.sup_slope < env - rel * env) ++v;
  }
  return v;
}

std::vector<SweepRow> breaking_sweep(const ExperimentConfig& base, const std::vector<double>& amplitudes,
                                     bool persist) {
  for (std::size_t i = 0; i < amplitudes.size(); ++i) {
    if (!(amplitudes[i] > 0.0)) throw std::invalid_argument("sweep amplitudes must be positive");
    if (i > 0 && !(amplitudes[i] > amplitudes[i - 1])) throw std::invalid_argument("sweep amplitudes must increase");
  }
  std::vector<SweepRow> rows(amplitudes.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < amplitudes.size(); ++i) {
    SweepRow& row = rows[i];
    row.amplitude = amplitudes[i];
    row.riccati_margin = std::numeric_limits<double>::quiet_NaN();
    try {
      ExperimentConfig c = base;
      c.initial.amplitude = amplitudes[i];
      c.output_dir = base.output_dir / ("amplitude_" + std::to_string(i));
      const RealField eta0 = make_initial_data(c.initial, c.grid);
      row.sup = predict(eta0, ExtremumKind::sup);
      row.inf = predict(eta0, ExtremumKind::inf);
      const RunRecord rec = run_simulation(c, persist);
      row.stop = rec.run.stop;
      row.final_slope_integral = rec.run.series.back().slope_integral;
      row.envelope_violations = envelope_violations(rec.run, row.sup);
      try {
        row.riccati_margin = slope_dynamics_check(rec.run, ExtremumKind::sup).riccati_margin;
      } catch (const std::invalid_argument&) {
      }
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  }
  if (persist) write_text(base.output_dir / "sweep.csv", sweep_csv(rows));
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << kSweepHeader << '\n';
  const auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
  for (const SweepRow& r : rows) {
    std::string err = r.error;
    std::replace(err.begin(), err.end(), ',', ';');
    std::replace(err.begin(), err.end(), '\n', ' ');
    os << format_double(r.amplitude) << ',' << format_double(r.sup.h1_norm) << ',' << format_double(r.sup.C0) << ','
       << format_double(r.sup.threshold()) << ',' << format_double(r.sup.M0) << ',' << r.sup.hypothesis_ok << ','
       << opt(r.sup.sigma) << ',' << opt(r.sup.T0_bound) << ',' << format_double(r.inf.M0) << ','
       << r.inf.hypothesis_ok << ',' << (r.stop ? to_string(r.stop->kind) : "") << ','
       << (r.stop ? format_double(r.stop->time) : "") << ',' << format_double(r.final_slope_integral) << ','
       << r.envelope_violations << ',' << format_double(r.riccati_margin) << ',' << err << '\n';
  }
  return os.str();
}

}  // namespace fsw
