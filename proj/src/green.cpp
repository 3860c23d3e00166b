#include "fsw/green.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <cmath>
#include <stdexcept>

#include "fsw/kernels.hpp"

namespace fsw {

namespace {

// cosh(L - s) / (2 sinh L) and sinh(L - s) / (2 sinh L) for s in [0, 2L],
// written with decaying exponentials so large L cannot overflow.
double even_part(double s, double L) {
  return (std::exp(-s) + std::exp(s - 2.0 * L)) / (2.0 * -std::expm1(-2.0 * L));
}

double odd_part(double s, double L) {
  return (std::exp(-s) - std::exp(s - 2.0 * L)) / (2.0 * -std::expm1(-2.0 * L));
}

}  // namespace

double periodized_green(double x, double half_length) { return even_part(std::abs(x), half_length); }

double periodized_green_derivative(double x, double half_length) {
  if (x == 0.0) return 0.0;
  const double sign = x > 0.0 ? 1.0 : -1.0;
  return -sign * odd_part(std::abs(x), half_length);
}

double green_image_sum(double x, double half_length, int terms) {
  double s = 0.0;
  for (int m = -terms; m <= terms; ++m) s += 0.5 * std::exp(-std::abs(x - 2.0 * half_length * m));
  return s;
}

namespace {

// Lagrange basis polynomial m on the integer nodes first, first+1, ..., first+p-1.
double lagrange(int m, int first, int p, double t) {
  const double tm = first + m;
  double v = 1.0;
  for (int j = 0; j < p; ++j) {
    if (j == m) continue;
    const double tj = first + j;
    v *= (t - tj) / (tm - tj);
  }
  return v;
}

}  // namespace

std::vector<double> convolution_weights(const GridSpec& grid, const std::function<double(double)>& kernel_forward,
                                        KernelQuadrature rule, int stencil) {
  const std::size_t n = grid.n();
  const double dx = grid.dx();
  std::vector<double> w(n, 0.0);
  if (rule == KernelQuadrature::trapezoid) {
    w[0] = 0.5 * dx * (kernel_forward(0.0) + kernel_forward(grid.period()));
    for (std::size_t d = 1; d < n; ++d) w[d] = dx * kernel_forward(static_cast<double>(d) * dx);
    return w;
  }
  if (stencil < 2 || stencil % 2 != 0 || static_cast<std::size_t>(stencil) > n) {
    throw std::invalid_argument("product-integration stencil must be even and at most n");
  }
  using Gauss = boost::math::quadrature::gauss<double, 20>;
  const int first = 1 - stencil / 2;  // local node positions first .. first+stencil-1
  const auto ni = static_cast<std::ptrdiff_t>(n);
  for (std::size_t c = 0; c < n; ++c) {
    const double base = static_cast<double>(c);
    for (int m = 0; m < stencil; ++m) {
      const double moment = Gauss::integrate(
          [&](double t) { return kernel_forward(dx * (base + t)) * lagrange(m, first, stencil, t); }, 0.0, 1.0);
      const std::ptrdiff_t d = static_cast<std::ptrdiff_t>(c) + first + m;
      w[static_cast<std::size_t>(((d % ni) + ni) % ni)] += dx * moment;
    }
  }
  return w;
}

namespace {

RealField apply_weights(const RealField& f, const std::vector<double>& w) {
  std::vector<double> out(f.size());
  kernels::omp::circulant_apply(w, f.samples(), out);
  return RealField(f.grid(), std::move(out));
}

}  // namespace

RealField green_kernel_convolution(const RealField& f, KernelQuadrature rule) {
  const double L = f.grid().half_length();
  // g_P(-s) with s measured forward from the target node.
  const auto kernel = [L](double s) { return even_part(s, L); };
  return apply_weights(f, convolution_weights(f.grid(), kernel, rule));
}

RealField green_derivative_convolution(const RealField& f, KernelQuadrature rule) {
  const double L = f.grid().half_length();
  // g_P'(-s) = sinh(L - s) / (2 sinh L) on (0, 2L); jumps from 1/2 to -1/2 across s = 0.
  const auto kernel = [L](double s) { return odd_part(s, L); };
  return apply_weights(f, convolution_weights(f.grid(), kernel, rule));
}

}  // namespace fsw
