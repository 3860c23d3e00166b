#pragma once

#include "fsw/grid.hpp"
#include "fsw/harness/config.hpp"

namespace fsw {

/// Samples the profile at the grid nodes:
///   gaussian     a exp(-((x-c)/w)^2)
///   sech2        a sech^2((x-c)/w)
///   sine_packet  a sin(k pi x / L) exp(-((x-c)/w)^2)
///   steep_ramp   a tanh((x-c)/w) exp(-((x-c)/(10 w))^2)
/// Throws std::invalid_argument if the profile or its slope exceeds 1e-12 at
/// the domain boundary, quoting the measured value.
RealField make_initial_data(const InitialDataSpec& spec, const GridSpec& grid);

/// The closed-form profile and its derivative at a single point.
double initial_profile(const InitialDataSpec& spec, double half_length, double x);
double initial_profile_derivative(const InitialDataSpec& spec, double half_length, double x);

}  // namespace fsw
