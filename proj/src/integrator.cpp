#include "fsw/integrator.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "fsw/spectral.hpp"

namespace fsw {

std::string to_string(StopKind k) {
  switch (k) {
    case StopKind::reached_t_end: return "reached_t_end";
    case StopKind::slope_threshold: return "slope_threshold";
    case StopKind::energy_drift: return "energy_drift";
    case StopKind::nonfinite: return "nonfinite";
  }
  throw std::invalid_argument("bad StopKind");
}

StopKind parse_stop_kind(const std::string& s) {
  for (StopKind k : {StopKind::reached_t_end, StopKind::slope_threshold, StopKind::energy_drift, StopKind::nonfinite}) {
    if (to_string(k) == s) return k;
  }
  throw std::invalid_argument("unknown stop reason '" + s + "'");
}

void SolverConfig::validate(const GridSpec& grid) const {
  const auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument(std::string(name) + " must be positive");
  };
  positive(t_end, "solver.t_end");
  positive(dt_init, "solver.dt_init");
  positive(cfl, "solver.cfl");
  positive(slope_stop, "solver.slope_stop");
  positive(energy_drift_stop, "solver.energy_drift_stop");
  if (dt_init > t_end) throw std::invalid_argument("solver.dt_init exceeds solver.t_end");
  if (record_every < 1) throw std::invalid_argument("solver.record_every must be at least 1");
  if (!(sobolev_s > 1.5)) throw std::invalid_argument("sobolev_s must exceed 3/2");
  variant.validate();
  if (variant.mollifier) variant.mollifier->validate_for(grid);
}

State rk4_step(const State& s, double dt, const RhsVariant& variant) {
  if (!(dt > 0.0)) throw std::invalid_argument("rk4_step needs dt > 0");
  const RealField k1 = evaluate_rhs(s.eta, variant);
  const RealField k2 = evaluate_rhs(s.eta.combine(1.0, k1, 0.5 * dt), variant);
  const RealField k3 = evaluate_rhs(s.eta.combine(1.0, k2, 0.5 * dt), variant);
  const RealField k4 = evaluate_rhs(s.eta.combine(1.0, k3, dt), variant);
  const std::size_t n = s.eta.size();
  std::vector<double> out(n);
  const double w = dt / 6.0;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = s.eta[i] + w * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return {s.t + dt, RealField(s.eta.grid(), std::move(out))};
}

double choose_dt(const State& state, const SolverConfig& config) {
  const double cfl_dt = config.cfl * state.eta.grid().dx() / (1.0 + 3.5 * state.eta.max_abs());
  double dt = std::min(config.dt_init, cfl_dt);
  const double remaining = config.t_end - state.t;
  // Accumulated rounding in t otherwise leaves a sliver step at the end.
  if (dt >= remaining * (1.0 - 1e-8)) dt = remaining;
  return dt;
}

namespace {

struct Slopes {
  SlopeExtremum inf;
  SlopeExtremum sup;
  double linf() const { return std::max(std::abs(inf.value), std::abs(sup.value)); }
};

Slopes measure(const RealField& eta, const Slopes* previous) {
  Slopes s;
  s.inf = extremum_slope(eta, ExtremumKind::inf,
                         previous ? std::optional<double>(previous->inf.location) : std::nullopt);
  s.sup = extremum_slope(eta, ExtremumKind::sup,
                         previous ? std::optional<double>(previous->sup.location) : std::nullopt);
  return s;
}

SeriesRow make_row(double t, const RealField& eta, const Slopes& sl, double integral, double s) {
  SeriesRow r;
  r.t = t;
  r.H = energy(eta);
  r.Hs_norm = sobolev_norm(eta, s);
  r.linf_slope = sl.linf();
  r.inf_slope = sl.inf.value;
  r.sup_slope = sl.sup.value;
  r.xi_inf = sl.inf.location;
  r.xi_sup = sl.sup.location;
  r.slope_integral = integral;
  return r;
}

}  // namespace

Trajectory integrate(const RealField& eta0, const SolverConfig& config) {
  config.validate(eta0.grid());
  const auto start = std::chrono::steady_clock::now();

  Trajectory run;
  run.grid = eta0.grid();
  State state{0.0, eta0};
  const double H0 = energy(eta0);
  const double mass0 = eta0.integral();
  // Relative to the initial mass unless that vanishes (odd data, zero data).
  const double mass_scale = std::abs(mass0) > 1e-12 * eta0.grid().period() * eta0.max_abs()
                                ? std::abs(mass0)
                                : eta0.grid().period() * eta0.max_abs();

  Slopes slopes = measure(eta0, nullptr);
  double integral = 0.0;
  const auto record = [&](const State& s) {
    run.series.push_back(make_row(s.t, s.eta, slopes, integral, config.sobolev_s));
    if (config.keep_snapshots) run.snapshots.push_back({s.t, s.eta});
  };
  record(state);

  std::size_t step = 0;
  run.stop = {StopKind::reached_t_end, 0.0, ""};
  while (state.t < config.t_end) {
    const double dt = choose_dt(state, config);
    std::optional<State> next;
    Slopes next_slopes;
    try {
      next = rk4_step(state, dt, config.variant);
      next_slopes = measure(next->eta, &slopes);
    } catch (const NumericalBreakdown& e) {
      run.stop = {StopKind::nonfinite, state.t, e.what()};
      break;
    }
    if (dt == config.t_end - state.t) next->t = config.t_end;
    integral += 0.5 * dt * (slopes.linf() + next_slopes.linf());
    state = std::move(*next);
    slopes = next_slopes;
    ++step;

    if (mass_scale > 0.0) {
      run.max_mass_drift = std::max(run.max_mass_drift, std::abs(state.eta.integral() - mass0) / mass_scale);
    }
    // H is invariant only for the exact system; mollified systems drift by O(eps^2).
    const bool monitor_energy = config.variant.kind == RhsKind::nonlocal_exact;
    const double drift = H0 > 0.0 ? std::abs(energy(state.eta) - H0) / H0 : std::abs(energy(state.eta));

    bool stop = false;
    if (slopes.linf() >= config.slope_stop) {
      run.stop = {StopKind::slope_threshold, state.t, "||eta_x||_inf reached " + std::to_string(slopes.linf())};
      stop = true;
    } else if (monitor_energy && drift > config.energy_drift_stop) {
      run.stop = {StopKind::energy_drift, state.t, "relative energy drift " + std::to_string(drift)};
      stop = true;
    } else if (state.t >= config.t_end) {
      run.stop = {StopKind::reached_t_end, state.t, ""};
      stop = true;
    }
    if (stop || step % static_cast<std::size_t>(config.record_every) == 0) record(state);
    if (stop) break;
  }
  if (run.series.back().t != state.t) record(state);
  run.steps = step;
  run.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return run;
}

}  // namespace fsw
