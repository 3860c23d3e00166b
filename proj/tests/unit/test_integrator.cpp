#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fsw/integrator.hpp"
#include "fsw/spectral.hpp"

using namespace fsw;
using std::numbers::pi;

namespace {

RealField gaussian(const GridSpec& g, double a, double w) {
  return RealField::from_function(g, [=](double x) { return a * std::exp(-(x / w) * (x / w)); });
}

}  // namespace

TEST_CASE("rk4 keeps equilibria") {
  const GridSpec g(64, 5.0);
  const State z = rk4_step({0.0, RealField::zeros(g)}, 0.3, RhsVariant::exact());
  CHECK(z.t == doctest::Approx(0.3));
  CHECK(z.eta.max_abs() == 0.0);
  const State c = rk4_step({1.0, RealField::constant(g, 0.7)}, 0.1, RhsVariant::exact());
  for (std::size_t i = 0; i < g.n(); ++i) CHECK(c.eta[i] == doctest::Approx(0.7).epsilon(1e-15));
  CHECK_THROWS_AS(rk4_step(z, 0.0, RhsVariant::exact()), std::invalid_argument);
}

TEST_CASE("choose_dt") {
  const GridSpec g(64, 5.0);
  SolverConfig c;
  c.t_end = 10.0;
  c.dt_init = 1.0;
  c.cfl = 0.3;
  CHECK(choose_dt({0.0, RealField::zeros(g)}, c) == doctest::Approx(0.3 * g.dx()));
  CHECK(choose_dt({0.0, RealField::constant(g, 2.0)}, c) == doctest::Approx(0.3 * g.dx() / 8.0));
  c.dt_init = 1e-3;
  CHECK(choose_dt({0.0, RealField::zeros(g)}, c) == doctest::Approx(1e-3));
  // The last step lands on t_end.
  CHECK(choose_dt({10.0 - 4e-4, RealField::zeros(g)}, c) == doctest::Approx(4e-4));
}

TEST_CASE("solver config validation") {
  const GridSpec g(64, 5.0);
  SolverConfig c;
  CHECK_NOTHROW(c.validate(g));
  c.dt_init = 2.0;
  CHECK_THROWS_AS(c.validate(g), std::invalid_argument);
  c = SolverConfig{};
  c.slope_stop = 0.0;
  CHECK_THROWS_AS(c.validate(g), std::invalid_argument);
  c = SolverConfig{};
  c.record_every = 0;
  CHECK_THROWS_AS(c.validate(g), std::invalid_argument);
  c = SolverConfig{};
  c.sobolev_s = 1.5;
  CHECK_THROWS_AS(c.validate(g), std::invalid_argument);
  c = SolverConfig{};
  c.variant = RhsVariant::mollified(RhsKind::mollified_B, {0.01, MollifierVariant::bump_convolution});
  CHECK_THROWS_AS(c.validate(g), std::invalid_argument);
  CHECK(parse_stop_kind("energy_drift") == StopKind::energy_drift);
  CHECK_THROWS_AS(parse_stop_kind("done"), std::invalid_argument);
}

TEST_CASE("zero data run") {
  const GridSpec g(64, 5.0);
  SolverConfig c;
  c.t_end = 1.0;
  c.dt_init = 0.1;
  const Trajectory run = integrate(RealField::zeros(g), c);
  CHECK(run.stop.kind == StopKind::reached_t_end);
  CHECK(run.series.back().t == 1.0);
  for (const auto& r : run.series) {
    CHECK(r.H == 0.0);
    CHECK(r.Hs_norm == 0.0);
    CHECK(r.linf_slope == 0.0);
    CHECK(r.slope_integral == 0.0);
  }
}

TEST_CASE("smooth run conserves energy and mass and is deterministic") {
  const GridSpec g(512, 20.0);
  SolverConfig c;
  c.t_end = 0.5;
  c.dt_init = 0.5;
  c.record_every = 5;
  const RealField eta0 = gaussian(g, 0.2, 1.5);
  const Trajectory a = integrate(eta0, c);
  const Trajectory b = integrate(eta0, c);
  CHECK(a.stop.kind == StopKind::reached_t_end);
  CHECK(a.series == b.series);
  CHECK(a.snapshots == b.snapshots);
  const double H0 = a.series.front().H;
  for (const auto& r : a.series) CHECK(std::abs(r.H - H0) <= 1e-8 * H0);
  CHECK(a.max_mass_drift <= 1e-10);
  for (std::size_t i = 1; i < a.series.size(); ++i) {
    CHECK(a.series[i].t > a.series[i - 1].t);
    CHECK(a.series[i].slope_integral >= a.series[i - 1].slope_integral);
  }
  CHECK(a.snapshots.size() == a.series.size());
}

TEST_CASE("record cadence and snapshot switch") {
  const GridSpec g(64, 10.0);
  SolverConfig c;
  c.t_end = 1.0;
  c.dt_init = 0.1;
  c.cfl = 1e9;
  c.record_every = 3;
  c.keep_snapshots = false;
  const Trajectory run = integrate(gaussian(g, 0.1, 1.0), c);
  // steps 0, 3, 6, 9 and the final step 10
  REQUIRE(run.series.size() == 5);
  CHECK(run.series[1].t == doctest::Approx(0.3));
  CHECK(run.series.back().t == 1.0);
  CHECK(run.snapshots.empty());
  CHECK(run.steps == 10);
}

TEST_CASE("overflowing data stops with nonfinite") {
  const GridSpec g(64, 10.0);
  SolverConfig c;
  c.t_end = 1.0;
  c.dt_init = 0.1;
  const Trajectory run = integrate(gaussian(g, 1e90, 1.0), c);
  CHECK(run.stop.kind == StopKind::nonfinite);
  CHECK(run.stop.time == 0.0);
}

TEST_CASE("slope threshold and energy drift stops") {
  const GridSpec g(256, 10.0);
  SolverConfig c;
  c.t_end = 1.0;
  c.dt_init = 0.01;
  c.slope_stop = 0.05;
  const Trajectory a = integrate(gaussian(g, 0.1, 1.0), c);
  CHECK(a.stop.kind == StopKind::slope_threshold);
  CHECK(a.series.back().linf_slope >= 0.05);

  c.slope_stop = 1e3;
  c.energy_drift_stop = 1e-16;
  c.cfl = 1e9;
  c.dt_init = 0.2;
  const Trajectory b = integrate(gaussian(g, 0.5, 0.5), c);
  CHECK(b.stop.kind == StopKind::energy_drift);

  // Mollified systems are not energy conserving, so the monitor is off for them.
  c.variant = RhsVariant::mollified(RhsKind::mollified_A, {0.4, MollifierVariant::spectral_cutoff});
  const Trajectory m = integrate(gaussian(g, 0.5, 0.5), c);
  CHECK(m.stop.kind == StopKind::reached_t_end);
}
