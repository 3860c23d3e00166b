#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "fsw/breaking.hpp"
#include "fsw/harness/initial_data.hpp"

using namespace fsw;
using std::numbers::pi;

TEST_CASE("breaking constant") {
  CHECK(breaking_constant(0.0) == 0.5);
  CHECK(breaking_constant(2.0) == doctest::Approx(15.5));
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    const double a = u(rng), b = u(rng);
    if (a < b) CHECK(breaking_constant(a) < breaking_constant(b));
  }
}

TEST_CASE("prediction from synthetic numbers") {
  const BreakingPrediction p = make_prediction(2.0, 3.0, 0.0, ExtremumKind::sup);
  CHECK(p.C0 == doctest::Approx(15.5));
  CHECK(p.threshold() == doctest::Approx(std::sqrt(31.0 / 7.0)));
  CHECK(p.threshold() == doctest::Approx(2.1044).epsilon(1e-4));
  REQUIRE(p.hypothesis_ok);
  CHECK(*p.sigma == doctest::Approx(31.0 / 63.0));
  CHECK(*p.sigma * p.M0 * p.M0 == doctest::Approx(2.0 * p.C0 / 7.0).epsilon(1e-12));
  CHECK(*p.T0_bound == doctest::Approx(0.1875));
  CHECK(riccati_envelope(p, 0.0) == 3.0);
  CHECK(riccati_envelope(p, 0.09375) == doctest::Approx(6.0));
  CHECK_THROWS_AS(riccati_envelope(p, 0.1875), std::invalid_argument);
  CHECK_THROWS_AS(riccati_envelope(p, -0.1), std::invalid_argument);

  const BreakingPrediction q = make_prediction(2.0, 2.0, 0.0, ExtremumKind::sup);
  CHECK_FALSE(q.hypothesis_ok);
  CHECK_FALSE(q.sigma.has_value());
  CHECK_FALSE(q.T0_bound.has_value());
  CHECK_THROWS_AS(riccati_envelope(q, 0.0), std::invalid_argument);
}

TEST_CASE("prediction on zero data") {
  const BreakingPrediction p = predict(RealField::zeros(GridSpec(64, 5.0)));
  CHECK(p.h1_norm == 0.0);
  CHECK(p.C0 == 0.5);
  CHECK(p.M0 == 0.0);
  CHECK_FALSE(p.hypothesis_ok);
}

TEST_CASE("prediction on the steep ramp matches an independent quadrature") {
  const InitialDataSpec spec{InitialFamily::steep_ramp, 0.5, 0.25, 0.0, {}};
  const GridSpec g(4096, 16.0);
  const BreakingPrediction p = predict(make_initial_data(spec, g));

  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  const auto integrand = [&](double x) {
    const double f = initial_profile(spec, 16.0, x);
    const double fx = initial_profile_derivative(spec, 16.0, x);
    return f * f + fx * fx;
  };
  double h1sq = 0.0;
  for (double a = -16.0; a < 16.0; a += 0.5) h1sq += GK::integrate(integrand, a, a + 0.5, 15, 1e-14);
  double m0 = -1e300;
  for (int i = 0; i <= 400000; ++i) m0 = std::max(m0, initial_profile_derivative(spec, 16.0, -1.0 + 2.0 * i / 400000.0));

  CHECK(p.h1_norm == doctest::Approx(std::sqrt(h1sq)).epsilon(1e-6));
  CHECK(p.M0 == doctest::Approx(m0).epsilon(1e-6));
  CHECK(p.C0 == doctest::Approx(breaking_constant(std::sqrt(h1sq))).epsilon(1e-6));
  CHECK(p.hypothesis_ok);

  const BreakingPrediction inf = predict(make_initial_data(spec, g), ExtremumKind::inf);
  CHECK(inf.M0 <= 0.0);
  CHECK_FALSE(inf.hypothesis_ok);
}

namespace {

Trajectory dense_run(const RealField& eta0, double t_end, double dt) {
  SolverConfig c;
  c.t_end = t_end;
  c.dt_init = dt;
  c.cfl = 1e9;
  return integrate(eta0, c);
}

}  // namespace

TEST_CASE("slope dynamics on a zero run") {
  const Trajectory run = dense_run(RealField::zeros(GridSpec(64, 5.0)), 0.1, 1e-4);
  const SlopeDynamicsReport r = slope_dynamics_check(run);
  for (std::size_t i = 0; i < r.trace.times.size(); ++i) {
    CHECK(r.trace.M[i] == 0.0);
    CHECK(r.trace.f_at_xi[i] == 0.0);
  }
  CHECK(r.identity_pass_fraction == 1.0);
  CHECK(r.riccati_margin == doctest::Approx(0.5));
  CHECK(r.riccati_pass);
}

TEST_CASE("slope dynamics rejects sparse records") {
  const Trajectory run = dense_run(RealField::zeros(GridSpec(64, 5.0)), 1.0, 0.1);
  CHECK_THROWS_AS(slope_dynamics_check(run), std::invalid_argument);
  Trajectory empty = run;
  empty.snapshots.clear();
  CHECK_THROWS_AS(slope_dynamics_check(empty), std::invalid_argument);
}

TEST_CASE("slope dynamics identity on a smooth run") {
  const GridSpec g(512, 20.0);
  const RealField eta0 = RealField::from_function(g, [](double x) { return 0.3 * std::exp(-x * x / 2.0); });
  const Trajectory run = dense_run(eta0, 0.2, 1e-4);
  CHECK(run.steps == 2000);
  const SlopeDynamicsReport r = slope_dynamics_check(run);
  // Tracking the full nonlocal slope term closes the identity.
  CHECK(r.identity_pass_fraction_complete == 1.0);
  for (std::size_t i = 1; i + 1 < r.trace.times.size(); ++i) CHECK(r.identity_error_complete[i] < 1e-6);
  CHECK(r.f_lower_margin > 0.0);
  CHECK(std::isnan(r.dMdt.front()));
}

TEST_CASE("characteristics of trivial runs") {
  const GridSpec g(64, 5.0);
  const Trajectory zero = dense_run(RealField::zeros(g), 1.0, 0.1);
  const CharacteristicSet z = advance_characteristics(zero, {-1.0, 0.0, 7.0});
  CHECK(z.trajectories[2][0] == doctest::Approx(-3.0));
  for (std::size_t s = 0; s < 3; ++s) {
    for (std::size_t i = 0; i < z.times.size(); ++i) {
      CHECK(z.trajectories[s][i] == doctest::Approx(g.wrap(z.seeds[s])));
      CHECK(z.jacobians[s][i] == doctest::Approx(1.0));
    }
  }

  const Trajectory cst = dense_run(RealField::constant(g, 0.4), 1.0, 0.1);
  const CharacteristicSet c = advance_characteristics(cst, {0.5, 4.9});
  for (std::size_t i = 0; i < c.times.size(); ++i) {
    CHECK(c.trajectories[0][i] == doctest::Approx(0.5 + 0.4 * c.times[i]).epsilon(1e-12));
    CHECK(c.trajectories[1][i] == doctest::Approx(g.wrap(4.9 + 0.4 * c.times[i])).epsilon(1e-12));
    CHECK(c.jacobians[1][i] == doctest::Approx(1.0));
  }
  Trajectory bare = cst;
  bare.snapshots.clear();
  CHECK_THROWS_AS(advance_characteristics(bare, {0.0}), std::invalid_argument);
}

TEST_CASE("characteristics of a gaussian run keep the flow map monotone") {
  const GridSpec g(512, 20.0);
  const RealField eta0 = RealField::from_function(g, [](double x) { return 0.5 * std::exp(-x * x); });
  const Trajectory run = dense_run(eta0, 1.0, 5e-3);
  REQUIRE(run.stop.kind == StopKind::reached_t_end);
  std::vector<double> seeds;
  for (int i = 0; i < 41; ++i) seeds.push_back(-4.0 + 0.2 * i);
  const CharacteristicSet cs = advance_characteristics(run, seeds);
  CHECK(cs.min_jacobian() > 0.0);
  for (std::size_t i = 0; i < cs.times.size(); ++i) {
    for (std::size_t s = 1; s < seeds.size(); ++s) CHECK(cs.unwrapped[s][i] > cs.unwrapped[s - 1][i]);
  }
  // The jacobian agrees with the spacing of neighbouring characteristics.
  const CharacteristicSet near = advance_characteristics(run, {-1e-3, 0.0, 1e-3});
  const std::size_t last = near.times.size() - 1;
  const double spread = (near.unwrapped[2][last] - near.unwrapped[0][last]) / 2e-3;
  CHECK(spread == doctest::Approx(near.jacobians[1][last]).epsilon(1e-5));
  CHECK(near.jacobians[1][last] == doctest::Approx(cs.jacobians[20][last]));
}
