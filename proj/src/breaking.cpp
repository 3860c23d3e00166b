#include "fsw/breaking.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "fsw/dynamics.hpp"
#include "fsw/kernels.hpp"

namespace fsw {

double breaking_constant(double h1) {
  const double h2 = h1 * h1;
  return 0.5 + 3.0 * h2 + (3.0 / 16.0) * h2 * h1 + (3.0 / 32.0) * h2 * h2;
}

double BreakingPrediction::threshold() const { return std::sqrt(2.0 * C0 / 7.0); }

BreakingPrediction make_prediction(double h1_norm, double M0, double x0, ExtremumKind kind) {
  BreakingPrediction p;
  p.h1_norm = h1_norm;
  p.C0 = breaking_constant(h1_norm);
  p.kind = kind;
  p.M0 = M0;
  p.x0 = x0;
  p.hypothesis_ok = M0 > p.threshold();
  if (p.hypothesis_ok) {
    const double sigma = 2.0 * p.C0 / (7.0 * M0 * M0);
    p.sigma = sigma;
    p.T0_bound = 2.0 / (7.0 * (1.0 - sigma) * M0);
  }
  return p;
}

BreakingPrediction predict(const RealField& eta0, ExtremumKind kind) {
  const SlopeExtremum e = extremum_slope(eta0, kind);
  return make_prediction(sobolev_norm(eta0, 1.0), e.value, e.location, kind);
}

double riccati_envelope(const BreakingPrediction& pred, double t) {
  if (!pred.hypothesis_ok) throw std::invalid_argument("riccati_envelope needs a prediction satisfying the hypothesis");
  if (t < 0.0) throw std::invalid_argument("riccati_envelope needs t >= 0");
  if (t >= *pred.T0_bound) throw std::invalid_argument("riccati_envelope evaluated at or beyond its pole");
  return pred.M0 / (1.0 - 3.5 * (1.0 - *pred.sigma) * t * pred.M0);
}

SlopeDynamicsReport slope_dynamics_check(const Trajectory& run, ExtremumKind kind, double identity_tolerance) {
  const auto& snaps = run.snapshots;
  if (snaps.size() < 3) throw std::invalid_argument("slope_dynamics_check needs at least three snapshots");
  const double span = snaps.back().t - snaps.front().t;
  for (std::size_t i = 1; i < snaps.size(); ++i) {
    const double gap = snaps[i].t - snaps[i - 1].t;
    if (!(gap > 0.0)) throw std::invalid_argument("snapshot times must be strictly increasing");
    if (gap > 1e-3 * span * (1.0 + 1e-9)) {
      throw std::invalid_argument("recording too sparse for slope dynamics: gap " + std::to_string(gap) +
                                  " exceeds 1e-3 of the span " + std::to_string(span));
    }
  }

  SlopeDynamicsReport r;
  r.kind = kind;
  r.identity_tolerance = identity_tolerance;
  r.C0 = breaking_constant(sobolev_norm(snaps.front().eta, 1.0));
  const std::size_t count = snaps.size();
  SlopeTrace& tr = r.trace;
  tr.times.resize(count);
  tr.M.resize(count);
  tr.xi.resize(count);
  tr.f_at_xi.resize(count);
  tr.riccati_rhs.resize(count);
  tr.f_complete_at_xi.resize(count);
  tr.riccati_rhs_complete.resize(count);

  // Extremum tracking is sequential (each hint is the previous location).
  std::optional<double> hint;
  for (std::size_t i = 0; i < count; ++i) {
    const SlopeExtremum e = extremum_slope(snaps[i].eta, kind, hint);
    hint = e.location;
    tr.times[i] = snaps[i].t;
    tr.M[i] = e.value;
    tr.xi[i] = e.location;
  }
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < count; ++i) {
    const double f = evaluate(to_spectral(f_functional(snaps[i].eta)), tr.xi[i]);
    const double fc = evaluate(to_spectral(f_functional_complete(snaps[i].eta)), tr.xi[i]);
    tr.f_at_xi[i] = f;
    tr.f_complete_at_xi[i] = fc;
    tr.riccati_rhs[i] = 3.5 * tr.M[i] * tr.M[i] + f;
    tr.riccati_rhs_complete[i] = 3.5 * tr.M[i] * tr.M[i] + fc;
  }

  const double nan = std::numeric_limits<double>::quiet_NaN();
  r.dMdt.assign(count, nan);
  r.identity_error.assign(count, nan);
  r.identity_error_complete.assign(count, nan);
  r.riccati_margin = std::numeric_limits<double>::infinity();
  std::size_t ok = 0, ok_complete = 0;
  for (std::size_t i = 1; i + 1 < count; ++i) {
    const double h1 = tr.times[i] - tr.times[i - 1];
    const double h2 = tr.times[i + 1] - tr.times[i];
    const double d = -h2 / (h1 * (h1 + h2)) * tr.M[i - 1] + (h2 - h1) / (h1 * h2) * tr.M[i] +
                     h1 / (h2 * (h1 + h2)) * tr.M[i + 1];
    r.dMdt[i] = d;
    r.identity_error[i] = std::abs(d - tr.riccati_rhs[i]) / (1.0 + std::abs(d));
    r.identity_error_complete[i] = std::abs(d - tr.riccati_rhs_complete[i]) / (1.0 + std::abs(d));
    if (r.identity_error[i] <= identity_tolerance) ++ok;
    if (r.identity_error_complete[i] <= identity_tolerance) ++ok_complete;
    r.riccati_margin = std::min(r.riccati_margin, d - 3.5 * tr.M[i] * tr.M[i] + r.C0);
  }
  r.interior_count = count - 2;
  r.identity_pass_fraction = static_cast<double>(ok) / static_cast<double>(r.interior_count);
  r.identity_pass_fraction_complete = static_cast<double>(ok_complete) / static_cast<double>(r.interior_count);
  r.riccati_pass = r.riccati_margin >= -1e-3 * r.C0;
  r.f_lower_margin = std::numeric_limits<double>::infinity();
  for (double f : tr.f_at_xi) r.f_lower_margin = std::min(r.f_lower_margin, f + r.C0);
  return r;
}

double CharacteristicSet::min_jacobian() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& j : jacobians) {
    for (double v : j) m = std::min(m, v);
  }
  return m;
}

CharacteristicSet advance_characteristics(const Trajectory& run, const std::vector<double>& seeds, int substeps) {
  if (run.snapshots.empty()) throw std::invalid_argument("advance_characteristics needs field snapshots");
  if (substeps < 1) throw std::invalid_argument("substeps must be at least 1");
  const GridSpec& g = run.grid;
  const std::size_t count = run.snapshots.size();

  CharacteristicSet out;
  out.seeds = seeds;
  for (const Snapshot& s : run.snapshots) out.times.push_back(s.t);
  const std::size_t ns = seeds.size();
  out.trajectories.assign(ns, std::vector<double>(count));
  out.unwrapped.assign(ns, std::vector<double>(count));
  out.jacobians.assign(ns, std::vector<double>(count));

  // Velocity at time fraction theta of interval i: 12-point local interpolation
  // in space, linear in time. The Jacobian uses the derivative of the same
  // interpolant, so it is the exact Jacobian of the computed flow.
  const double x0 = g.node(0);
  const double dx = g.dx();
  const auto at = [&](std::size_t i, double theta, double x) {
    const kernels::LagrangeValue a = kernels::lagrange_eval(run.snapshots[i].eta.samples(), x0, dx, x);
    if (theta == 0.0 || i + 1 >= count) return a;
    const kernels::LagrangeValue b = kernels::lagrange_eval(run.snapshots[i + 1].eta.samples(), x0, dx, x);
    return kernels::LagrangeValue{(1.0 - theta) * a.value + theta * b.value,
                                  (1.0 - theta) * a.derivative + theta * b.derivative};
  };

#pragma omp parallel for schedule(dynamic)
  for (std::size_t s = 0; s < ns; ++s) {
    double q = g.wrap(seeds[s]);
    double log_jac = 0.0;
    out.unwrapped[s][0] = q;
    out.trajectories[s][0] = q;
    out.jacobians[s][0] = 1.0;
    for (std::size_t i = 0; i + 1 < count; ++i) {
      const double dt = (out.times[i + 1] - out.times[i]) / substeps;
      for (int k = 0; k < substeps; ++k) {
        const double th0 = static_cast<double>(k) / substeps;
        const double thh = (k + 0.5) / substeps;
        const double th1 = static_cast<double>(k + 1) / substeps;
        // RK4 on the augmented system (q, log q_x).
        const auto k1 = at(i, th0, q);
        const auto k2 = at(i, thh, q + 0.5 * dt * k1.value);
        const auto k3 = at(i, thh, q + 0.5 * dt * k2.value);
        const auto k4 = at(i, th1, q + dt * k3.value);
        q += dt / 6.0 * (k1.value + 2.0 * k2.value + 2.0 * k3.value + k4.value);
        log_jac += dt / 6.0 * (k1.derivative + 2.0 * k2.derivative + 2.0 * k3.derivative + k4.derivative);
      }
      out.unwrapped[s][i + 1] = q;
      out.trajectories[s][i + 1] = g.wrap(q);
      out.jacobians[s][i + 1] = std::exp(log_jac);
    }
  }
  return out;
}

}  // namespace fsw
