#pragma once

#include <functional>
#include <vector>

#include "fsw/grid.hpp"

namespace fsw {

/// Periodization of g(x) = exp(-|x|)/2 with period 2L:
/// g_P(x) = cosh(L - |x|) / (2 sinh L) for |x| <= L.
double periodized_green(double x, double half_length);

/// Derivative of g_P, -sign(x) sinh(L - |x|) / (2 sinh L); zero at x = 0.
double periodized_green_derivative(double x, double half_length);

/// Truncated image sum sum_{|m| <= terms} exp(-|x - 2 L m|) / 2.
double green_image_sum(double x, double half_length, int terms = 40);

enum class KernelQuadrature {
  /// dx * sum_j K(x_i - x_j) f_j. Second order because K has a kink at the origin.
  trapezoid,
  /// Exact integration of K against local degree-(stencil-1) Lagrange
  /// interpolants of f on each cell. The kink falls on cell boundaries.
  product_integration,
};

/// Convolution weights w_d such that (K * f)(x_i) ~ sum_d w_d f_{i+d}.
/// `kernel_forward(s)` is K(-s) for s in [0, 2L], smooth on the open interval;
/// its one-sided limits at the endpoints are used by product integration.
std::vector<double> convolution_weights(const GridSpec& grid, const std::function<double(double)>& kernel_forward,
                                        KernelQuadrature rule, int stencil = 12);

/// Direct O(n^2) evaluation of g * f with the periodized kernel. Independent
/// of the Fourier route used by helmholtz_inverse.
RealField green_kernel_convolution(const RealField& f,
                                   KernelQuadrature rule = KernelQuadrature::product_integration);

/// Direct O(n^2) evaluation of g_x * f.
RealField green_derivative_convolution(const RealField& f,
                                       KernelQuadrature rule = KernelQuadrature::product_integration);

}  // namespace fsw
