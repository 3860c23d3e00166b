#include "fsw/harness/initial_data.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fsw {

double initial_profile(const InitialDataSpec& s, double half_length, double x) {
  const double z = (x - s.center) / s.width;
  switch (s.family) {
    case InitialFamily::gaussian: return s.amplitude * std::exp(-z * z);
    case InitialFamily::sech2: {
      const double c = 1.0 / std::cosh(z);
      return s.amplitude * c * c;
    }
    case InitialFamily::sine_packet:
      return s.amplitude * std::sin(*s.wavenumber * std::numbers::pi * x / half_length) * std::exp(-z * z);
    case InitialFamily::steep_ramp: return s.amplitude * std::tanh(z) * std::exp(-0.01 * z * z);
  }
  throw std::invalid_argument("bad family");
}

double initial_profile_derivative(const InitialDataSpec& s, double half_length, double x) {
  const double z = (x - s.center) / s.width;
  const double w = s.width;
  switch (s.family) {
    case InitialFamily::gaussian: return -2.0 * z / w * s.amplitude * std::exp(-z * z);
    case InitialFamily::sech2: {
      const double c = 1.0 / std::cosh(z);
      return -2.0 * s.amplitude * c * c * std::tanh(z) / w;
    }
    case InitialFamily::sine_packet: {
      const double k = *s.wavenumber * std::numbers::pi / half_length;
      const double g = std::exp(-z * z);
      return s.amplitude * g * (k * std::cos(k * x) - 2.0 * z / w * std::sin(k * x));
    }
    case InitialFamily::steep_ramp: {
      const double c = 1.0 / std::cosh(z);
      const double g = std::exp(-0.01 * z * z);
      return s.amplitude * g * (c * c / w - 0.02 * z / w * std::tanh(z));
    }
  }
  throw std::invalid_argument("bad family");
}

RealField make_initial_data(const InitialDataSpec& spec, const GridSpec& grid) {
  spec.validate();
  const double L = grid.half_length();
  // Decay of the profile and its slope over both ends of the periodic cell.
  double boundary = 0.0;
  for (double x : {-L, L}) {
    boundary = std::max({boundary, std::abs(initial_profile(spec, L, x)),
                         std::abs(initial_profile_derivative(spec, L, x))});
  }
  if (boundary > 1e-12) {
    throw std::invalid_argument("initial data does not decay at the boundary: |eta| or |eta_x| = " +
                                std::to_string(boundary) + " at x = +-L (limit 1e-12)");
  }
  return RealField::from_function(grid, [&](double x) { return initial_profile(spec, L, x); });
}

}  // namespace fsw
