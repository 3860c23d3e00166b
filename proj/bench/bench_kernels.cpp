// Wall-clock comparison of the serial and OpenMP kernels, plus end-to-end
// right-hand-side and RK4 step costs.

#include <CLI11.hpp>
#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fsw/dynamics.hpp"
#include "fsw/integrator.hpp"
#include "fsw/kernels.hpp"
#include "fsw/spectral.hpp"

namespace {

using Clock = std::chrono::steady_clock;

// Median seconds per call over `reps` timed calls after one warm-up.
double time_it(int reps, const std::function<void()>& body) {
  body();
  std::vector<double> t;
  for (int r = 0; r < reps; ++r) {
    const auto start = Clock::now();
    body();
    t.push_back(std::chrono::duration<double>(Clock::now() - start).count());
  }
  std::nth_element(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(t.size() / 2), t.end());
  return t[t.size() / 2];
}

void report(const std::string& name, std::size_t n, double serial, double parallel) {
  std::printf("%-22s n=%-8zu serial %10.3e s  omp %10.3e s  speedup %5.2f\n", name.c_str(), n, serial, parallel,
              serial / parallel);
}

std::vector<double> random_vector(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kernel benchmarks"};
  std::size_t n = 16384;
  int reps = 5;
  app.add_option("-n,--size", n, "grid size for the pointwise kernels");
  app.add_option("-r,--reps", reps, "timed repetitions per kernel");
  CLI11_PARSE(app, argc, argv);

  std::printf("threads: %d\n", omp_get_max_threads());
  using namespace fsw;

  {
    const std::size_t m = std::min<std::size_t>(n, 4096);
    const auto w = random_vector(m, 1), f = random_vector(m, 2);
    std::vector<double> out(m);
    report("circulant_apply", m, time_it(reps, [&] { kernels::serial::circulant_apply(w, f, out); }),
           time_it(reps, [&] { kernels::omp::circulant_apply(w, f, out); }));
  }
  {
    const auto f = random_vector(n, 3);
    std::vector<std::ptrdiff_t> offsets;
    std::vector<double> w;
    for (int d = -12; d <= 12; ++d) offsets.push_back(d), w.push_back(1.0 / 25.0);
    std::vector<double> out(n);
    report("sparse_circulant", n, time_it(reps, [&] { kernels::serial::sparse_circulant_apply(offsets, w, f, out); }),
           time_it(reps, [&] { kernels::omp::sparse_circulant_apply(offsets, w, f, out); }));
  }
  {
    const std::size_t m = 3 * n;
    const auto u = random_vector(m, 4), ux = random_vector(m, 5);
    std::vector<double> sq(m), poly(m);
    const kernels::PolynomialCoefficients c{-2.5, 1.75, 0.125, -3.0 / 64};
    report("polynomial_terms", m, time_it(reps, [&] { kernels::serial::polynomial_terms(u, ux, c, sq, poly); }),
           time_it(reps, [&] { kernels::omp::polynomial_terms(u, ux, c, sq, poly); }));
  }
  {
    const GridSpec g(std::min<std::size_t>(n, 2048), 10.0);
    const SpectralField s = to_spectral(RealField(g, random_vector(g.n(), 6)));
    std::vector<double> pts(4096);
    for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = -10.0 + 20.0 * static_cast<double>(i) / pts.size();
    std::vector<double> out(pts.size());
    report("trig_eval", g.n(), time_it(reps, [&] { kernels::serial::trig_eval(s.half_spectrum(), 10.0, pts, out); }),
           time_it(reps, [&] { kernels::omp::trig_eval(s.half_spectrum(), 10.0, pts, out); }));
  }
  {
    const GridSpec g(n, 16.0);
    const RealField eta = RealField::from_function(g, [](double x) { return 0.25 * std::tanh(4 * x) * std::exp(-x * x / 4); });
    double sink = 0.0;
    const double t_rhs = time_it(reps, [&] { sink += rhs(eta)[0]; });
    const double t_step = time_it(reps, [&] { sink += rk4_step({0.0, eta}, 1e-4, RhsVariant::exact()).eta[0]; });
    std::printf("%-22s n=%-8zu %10.3e s\n", "rhs", n, t_rhs);
    std::printf("%-22s n=%-8zu %10.3e s\n", "rk4_step", n, t_step);
    if (sink == 42.0) std::printf(" \n");
  }
  return 0;
}
