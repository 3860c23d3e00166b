#pragma once

// Data-parallel inner loops of the solver. Every kernel exists twice: a plain
// serial reference in `serial` and an OpenMP version in `omp`. The OpenMP
// versions only split independent output entries across threads and keep the
// per-entry summation order of the reference, so both produce identical bits.

#include <complex>
#include <cstddef>
#include <span>

namespace fsw::kernels {

/// Coefficients of the pointwise polynomial c2*u^2 + cx2*ux^2 + c3*u^3 + c4*u^4.
struct PolynomialCoefficients {
  double c2 = 0.0;
  double cx2 = 0.0;
  double c3 = 0.0;
  double c4 = 0.0;
};

namespace serial {

/// out[i] = sum_d weights[d] * f[(i + d) mod n], with n = f.size() = weights.size().
void circulant_apply(std::span<const double> weights, std::span<const double> f, std::span<double> out);

/// out[i] = sum_m weights[m] * f[(i + offsets[m]) mod n].
void sparse_circulant_apply(std::span<const std::ptrdiff_t> offsets, std::span<const double> weights,
                            std::span<const double> f, std::span<double> out);

/// square[i] = u[i]^2 and poly[i] = the polynomial above at (u[i], ux[i]).
void polynomial_terms(std::span<const double> u, std::span<const double> ux, const PolynomialCoefficients& c,
                      std::span<double> square, std::span<double> poly);

/// out[i] = a[i] * b[i].
void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out);

/// Evaluates the real trigonometric interpolant with normalized half spectrum
/// `coeffs` on a period-2L grid starting at -L at each of `points`.
void trig_eval(std::span<const std::complex<double>> coeffs, double half_length, std::span<const double> points,
               std::span<double> out);

}  // namespace serial

namespace omp {

void circulant_apply(std::span<const double> weights, std::span<const double> f, std::span<double> out);
void sparse_circulant_apply(std::span<const std::ptrdiff_t> offsets, std::span<const double> weights,
                            std::span<const double> f, std::span<double> out);
void polynomial_terms(std::span<const double> u, std::span<const double> ux, const PolynomialCoefficients& c,
                      std::span<double> square, std::span<double> poly);
void multiply(std::span<const double> a, std::span<const double> b, std::span<double> out);
void trig_eval(std::span<const std::complex<double>> coeffs, double half_length, std::span<const double> points,
               std::span<double> out);

}  // namespace omp

/// Single-point interpolant evaluation shared by both variants.
double trig_eval_point(std::span<const std::complex<double>> coeffs, double half_length, double x);

/// Local polynomial interpolation of periodic samples f[i] = f(x0 + i dx) at x,
/// using the `points` nodes nearest to x (even, 2..32).
double lagrange_eval_point(std::span<const double> samples, double x0, double dx, double x, int points = 12);

struct LagrangeValue {
  double value;
  double derivative;
};

/// The same interpolant together with its exact derivative.
LagrangeValue lagrange_eval(std::span<const double> samples, double x0, double dx, double x, int points = 12);

}  // namespace fsw::kernels
