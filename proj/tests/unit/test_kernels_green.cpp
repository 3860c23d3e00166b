#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fsw/green.hpp"
#include "fsw/kernels.hpp"
#include "fsw/spectral.hpp"

using namespace fsw;
using std::numbers::pi;

namespace {

std::vector<double> random_vector(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

// Random real trigonometric polynomial with modes |k| <= kmax on the grid.
RealField band_limited(const GridSpec& g, int kmax, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> nd;
  std::vector<std::complex<double>> c(g.n() / 2 + 1, 0.0);
  c[0] = nd(rng);
  for (int k = 1; k <= kmax; ++k) c[static_cast<std::size_t>(k)] = {nd(rng) / k, nd(rng) / k};
  return to_physical(SpectralField(g, c));
}

}  // namespace

TEST_CASE("serial and OpenMP kernels agree bit for bit") {
  const std::size_t n = 8192;
  const auto f = random_vector(n, 1);
  const auto w = random_vector(n, 2);
  std::vector<double> a(n), b(n);
  kernels::serial::circulant_apply(w, f, a);
  kernels::omp::circulant_apply(w, f, b);
  CHECK(a == b);

  const std::vector<std::ptrdiff_t> offsets{-3, -1, 0, 2, 5};
  const std::vector<double> sw{0.1, 0.2, 0.4, 0.2, 0.1};
  kernels::serial::sparse_circulant_apply(offsets, sw, f, a);
  kernels::omp::sparse_circulant_apply(offsets, sw, f, b);
  CHECK(a == b);
  CHECK(a[0] == doctest::Approx(0.1 * f[n - 3] + 0.2 * f[n - 1] + 0.4 * f[0] + 0.2 * f[2] + 0.1 * f[5]));

  const kernels::PolynomialCoefficients pc{-2.5, 1.75, 0.125, -3.0 / 64};
  std::vector<double> s1(n), s2(n), p1(n), p2(n);
  kernels::serial::polynomial_terms(f, w, pc, s1, p1);
  kernels::omp::polynomial_terms(f, w, pc, s2, p2);
  CHECK(s1 == s2);
  CHECK(p1 == p2);
  const double u = f[17], ux = w[17];
  CHECK(p1[17] == doctest::Approx(-2.5 * u * u + 1.75 * ux * ux + 0.125 * u * u * u - 3.0 / 64 * u * u * u * u));

  kernels::serial::multiply(f, w, a);
  kernels::omp::multiply(f, w, b);
  CHECK(a == b);

  const GridSpec g(256, 4.0);
  const SpectralField c = to_spectral(band_limited(g, 40, 3));
  std::vector<double> pts(70000);
  for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = -4.0 + 8.0 * double(i) / double(pts.size());
  std::vector<double> e1(pts.size()), e2(pts.size());
  kernels::serial::trig_eval(c.half_spectrum(), 4.0, pts, e1);
  kernels::omp::trig_eval(c.half_spectrum(), 4.0, pts, e2);
  CHECK(e1 == e2);
}

TEST_CASE("local lagrange interpolation") {
  const std::size_t n = 256;
  const double L = 4.0, dx = 2.0 * L / n;
  std::vector<double> f(n), c(n, 0.75);
  for (std::size_t i = 0; i < n; ++i) f[i] = std::sin(pi * (-L + i * dx) / L * 3.0);
  CHECK(kernels::lagrange_eval_point(f, -L, dx, -L + 17 * dx) == f[17]);
  for (double x : {-3.999, -1.2345, 0.001, 2.5, 3.99, 7.5}) {
    CHECK(kernels::lagrange_eval_point(c, -L, dx, x) == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(std::abs(kernels::lagrange_eval_point(f, -L, dx, x) - std::sin(3.0 * pi * x / L)) < 1e-12);
  }
  for (double x : {-2.0 + 0.3 * dx, -L + 5 * dx, 1.1}) {
    const auto v = kernels::lagrange_eval(f, -L, dx, x);
    CHECK(v.value == kernels::lagrange_eval_point(f, -L, dx, x));
    CHECK(std::abs(v.derivative - 3.0 * pi / L * std::cos(3.0 * pi * x / L)) < 1e-10);
    const double h = 1e-6;
    const double fd = (kernels::lagrange_eval_point(f, -L, dx, x + h) - kernels::lagrange_eval_point(f, -L, dx, x - h)) / (2 * h);
    CHECK(v.derivative == doctest::Approx(fd).epsilon(1e-7));
  }
  CHECK_THROWS_AS(kernels::lagrange_eval_point(f, -L, dx, 0.1, 7), std::invalid_argument);
  CHECK_THROWS_AS(kernels::lagrange_eval_point(std::vector<double>(8, 1.0), -L, dx, 0.1, 12), std::invalid_argument);
}

TEST_CASE("circulant apply matches a direct sum") {
  const std::size_t n = 64;
  const auto f = random_vector(n, 4);
  const auto w = random_vector(n, 5);
  std::vector<double> out(n);
  kernels::serial::circulant_apply(w, f, out);
  for (std::size_t i = 0; i < n; i += 9) {
    double s = 0.0;
    for (std::size_t d = 0; d < n; ++d) s += w[d] * f[(i + d) % n];
    CHECK(out[i] == doctest::Approx(s).epsilon(1e-14));
  }
}

TEST_CASE("periodized green kernel equals its image sum") {
  for (double L : {0.5, 1.0, pi, 20.0}) {
    for (double x : {0.0, 0.1, -0.3 * L, 0.99 * L, L}) {
      CHECK(periodized_green(x, L) == doctest::Approx(green_image_sum(x, L, 60)).epsilon(1e-12));
      CHECK(periodized_green(x, L) == doctest::Approx(std::cosh(L - std::abs(x)) / (2.0 * std::sinh(L))).epsilon(1e-12));
    }
    // The derivative is the odd part, with a jump of -1 at the origin.
    const double h = 1e-6;
    const double x = 0.37 * L;
    const double fd = (periodized_green(x + h, L) - periodized_green(x - h, L)) / (2.0 * h);
    CHECK(periodized_green_derivative(x, L) == doctest::Approx(fd).epsilon(1e-7));
    CHECK(periodized_green_derivative(-x, L) == doctest::Approx(-fd).epsilon(1e-7));
  }
  CHECK(periodized_green_derivative(0.0, 2.0) == 0.0);
  // Large half lengths must not overflow.
  CHECK(std::isfinite(periodized_green(1.0, 800.0)));
}

TEST_CASE("convolution of a node impulse returns the kernel samples") {
  const GridSpec g(128, pi);
  std::vector<double> v(g.n(), 0.0);
  const std::size_t j = 40;
  v[j] = 1.0 / g.dx();
  const RealField impulse(g, v);
  const RealField out = green_kernel_convolution(impulse, KernelQuadrature::trapezoid);
  for (std::size_t i = 0; i < g.n(); ++i) {
    if (i == j) continue;
    CHECK(out[i] == doctest::Approx(green_image_sum(g.node(i) - g.node(j), pi)).epsilon(1e-12));
  }
  CHECK(out[j] == doctest::Approx(green_image_sum(0.0, pi)).epsilon(1e-12));
}

TEST_CASE("green convolution reproduces the helmholtz multiplier") {
  const GridSpec g(256, pi);
  for (unsigned seed = 0; seed < 4; ++seed) {
    const RealField f = band_limited(g, 16, 100 + seed);
    const RealField spectral = helmholtz_inverse(f);
    CHECK((green_kernel_convolution(f) - spectral).max_abs() < 1e-8);
    const RealField spectral_x = derivative(spectral, 1);
    CHECK((green_derivative_convolution(f) - spectral_x).max_abs() < 1e-8);
  }
  // The trapezoid rule converges only at second order on the kink.
  const RealField c3 = RealField::from_function(GridSpec(64, pi), [](double x) { return std::cos(3 * x); });
  const double trap = (green_kernel_convolution(c3, KernelQuadrature::trapezoid) - helmholtz_inverse(c3)).max_abs();
  CHECK(trap > 1e-5);
  CHECK(trap < 1e-2);
}

TEST_CASE("product integration weights integrate the kernel exactly") {
  // sum of weights = integral of g over a period = 1 (the kernel has unit mass).
  const GridSpec g(64, 2.0);
  const auto w = convolution_weights(g, [](double s) { return periodized_green(s, 2.0); },
                                     KernelQuadrature::product_integration);
  double sum = 0.0;
  for (double x : w) sum += x;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));
  CHECK_THROWS_AS(convolution_weights(g, [](double) { return 1.0; }, KernelQuadrature::product_integration, 3),
                  std::invalid_argument);
}
