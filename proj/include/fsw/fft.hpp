#pragma once

#include <complex>
#include <span>

#include "fsw/grid.hpp"

namespace fsw::fft {

/// Unnormalized real-to-complex DFT of length m = in.size():
/// out[k] = sum_j in[j] exp(-2 pi i j k / m), k = 0..m/2.
/// Plans are cached per length; execution is thread safe and deterministic.
void forward(std::span<const double> in, std::span<std::complex<double>> out);

/// Unnormalized inverse of `forward` (out.size() = m, in.size() = m/2+1).
/// Imaginary parts of the k = 0 and k = m/2 entries are ignored.
void inverse(std::span<const std::complex<double>> in, std::span<double> out);

}  // namespace fsw::fft

namespace fsw {

SpectralField to_spectral(const RealField& f);
RealField to_physical(const SpectralField& c);

}  // namespace fsw
