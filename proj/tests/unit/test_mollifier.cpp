#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fsw/mollifier.hpp"
#include "fsw/spectral.hpp"

using namespace fsw;
using std::numbers::pi;

TEST_CASE("bump normalization and transform") {
  // 1 / integral of exp(-1/(1-x^2)) over (-1, 1), from an independent scipy quad.
  CHECK(bump_normalization() == doctest::Approx(2.2522836210435817).epsilon(1e-14));
  CHECK(bump_profile(1.0) == 0.0);
  CHECK(bump_profile(-1.5) == 0.0);
  CHECK(bump_profile(0.0) == doctest::Approx(2.2522836210435817 * std::exp(-1.0)).epsilon(1e-14));
  CHECK(bump_fourier_transform(0.0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(bump_fourier_transform(3.0) == doctest::Approx(bump_fourier_transform(-3.0)).epsilon(1e-15));
  // Smooth compact support: fast decay of the transform.
  CHECK(std::abs(bump_fourier_transform(60.0)) < 1e-3);
}

TEST_CASE("mollifier spec validation") {
  const GridSpec g(256, pi);
  CHECK_THROWS_AS((MollifierSpec{0.0, MollifierVariant::spectral_cutoff}.validate_for(g)), std::invalid_argument);
  CHECK_THROWS_AS((MollifierSpec{2.0 * g.dx(), MollifierVariant::bump_convolution}.validate_for(g)),
                  std::invalid_argument);
  CHECK_THROWS_AS((MollifierSpec{4.0, MollifierVariant::bump_convolution}.validate_for(g)), std::invalid_argument);
  CHECK_NOTHROW((MollifierSpec{2.0 * g.dx(), MollifierVariant::spectral_cutoff}.validate_for(g)));
  CHECK(parse_mollifier_variant("bump_convolution") == MollifierVariant::bump_convolution);
  CHECK(to_string(MollifierVariant::spectral_cutoff) == "spectral_cutoff");
  CHECK_THROWS_AS(parse_mollifier_variant("box"), std::invalid_argument);
}

TEST_CASE("both variants preserve constants and shrink sup norms") {
  const GridSpec g(512, 10.0);
  const RealField c = RealField::constant(g, 1.7);
  const RealField f = RealField::from_function(g, [](double x) { return std::exp(-x * x) * std::sin(3 * x); });
  for (auto v : {MollifierVariant::bump_convolution, MollifierVariant::spectral_cutoff}) {
    const MollifierSpec spec{0.3, v};
    const RealField jc = mollify(c, spec);
    for (std::size_t i = 0; i < g.n(); i += 31) CHECK(jc[i] == doctest::Approx(1.7).epsilon(1e-13));
    CHECK(mollify(f, spec).max_abs() <= f.max_abs() * (1.0 + 1e-10));
  }
}

TEST_CASE("bump convolution and spectral cutoff agree on resolved fields") {
  // The cutoff multiplies mode k by rho_hat(eps xi_k); the discrete bump sum
  // is a quadrature of the same convolution and converges faster than any power.
  double prev = 1e300;
  for (std::size_t n : {1024, 2048, 4096}) {
    const GridSpec g(n, 10.0);
    const RealField f = RealField::from_function(g, [](double x) { return std::exp(-x * x); });
    const RealField a = mollify(f, {0.5, MollifierVariant::bump_convolution});
    const RealField b = mollify(f, {0.5, MollifierVariant::spectral_cutoff});
    const double err = (a - b).max_abs();
    CHECK(err < 1e-2 * prev);
    prev = err;
  }
  CHECK(prev < 1e-12);
}

TEST_CASE("spectral cutoff commutes with differentiation") {
  const GridSpec g(1024, 20.0 * pi);
  const RealField f = RealField::from_function(g, [](double x) { return 0.1 * std::exp(-x * x / 4.0); });
  const MollifierSpec spec{0.1, MollifierVariant::spectral_cutoff};
  const RealField lhs = derivative(mollify(f, spec), 1);
  const RealField rhs = mollify(derivative(f, 1), spec);
  CHECK((lhs - rhs).max_abs() <= 1e-12);
}

TEST_CASE("property report on a smooth field") {
  const GridSpec g(1024, 20.0 * pi);
  const RealField f = RealField::from_function(g, [](double x) { return 0.1 * std::exp(-x * x / 4.0); });
  const auto r = verify_mollifier_properties(f, {0.1, MollifierVariant::spectral_cutoff});
  CHECK(r.linf_pass);
  CHECK(r.commutation_pass);
  CHECK(r.growth_pass);
  REQUIRE(r.convergence_errors.size() == 4);
  for (std::size_t i = 1; i < 4; ++i) CHECK(r.convergence_errors[i] < r.convergence_errors[i - 1]);
  // A smooth field converges at second order under a symmetric mollifier.
  CHECK(r.convergence_order == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("loglog slope") {
  CHECK(loglog_slope({1.0, 2.0, 4.0}, {3.0, 12.0, 48.0}) == doctest::Approx(2.0));
  CHECK_THROWS_AS(loglog_slope({1.0}, {1.0}), std::invalid_argument);
}
