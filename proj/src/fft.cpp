#include "fsw/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace fsw::fft {
namespace {

// FFTW planning is not thread safe, execution with the new-array interface is.
// Unaligned plans keep the selected codelets independent of buffer alignment,
// so a given input always produces the same bits.
struct PlanPair {
  fftw_plan r2c = nullptr;
  fftw_plan c2r = nullptr;
};

class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [m, p] : plans_) {
      fftw_destroy_plan(p.r2c);
      fftw_destroy_plan(p.c2r);
    }
  }

  const PlanPair& get(std::size_t m) {
    std::lock_guard lock(mutex_);
    auto it = plans_.find(m);
    if (it != plans_.end()) return it->second;
    std::vector<double> real(m);
    std::vector<std::complex<double>> cplx(m / 2 + 1);
    auto* c = reinterpret_cast<fftw_complex*>(cplx.data());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    PlanPair p;
    p.r2c = fftw_plan_dft_r2c_1d(static_cast<int>(m), real.data(), c, flags);
    p.c2r = fftw_plan_dft_c2r_1d(static_cast<int>(m), c, real.data(), flags);
    if (p.r2c == nullptr || p.c2r == nullptr) throw std::runtime_error("FFTW planning failed");
    return plans_.emplace(m, p).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<std::size_t, PlanPair> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

}  // namespace

void forward(std::span<const double> in, std::span<std::complex<double>> out) {
  const std::size_t m = in.size();
  if (out.size() != m / 2 + 1) throw std::invalid_argument("fft::forward: output size must be m/2+1");
  const PlanPair& p = cache().get(m);
  // r2c leaves its input untouched, but the C API wants a mutable pointer.
  fftw_execute_dft_r2c(p.r2c, const_cast<double*>(in.data()),
                       reinterpret_cast<fftw_complex*>(out.data()));
}

void inverse(std::span<const std::complex<double>> in, std::span<double> out) {
  const std::size_t m = out.size();
  if (in.size() != m / 2 + 1) throw std::invalid_argument("fft::inverse: input size must be m/2+1");
  const PlanPair& p = cache().get(m);
  // c2r destroys its input.
  std::vector<std::complex<double>> scratch(in.begin(), in.end());
  fftw_execute_dft_c2r(p.c2r, reinterpret_cast<fftw_complex*>(scratch.data()), out.data());
}

}  // namespace fsw::fft

namespace fsw {

SpectralField to_spectral(const RealField& f) {
  const std::size_t n = f.size();
  std::vector<std::complex<double>> c(n / 2 + 1);
  fft::forward(f.samples(), c);
  const double inv = 1.0 / static_cast<double>(n);
  for (auto& v : c) v *= inv;
  return SpectralField(f.grid(), std::move(c));
}

RealField to_physical(const SpectralField& c) {
  std::vector<double> out(c.grid().n());
  fft::inverse(c.half_spectrum(), out);
  return RealField(c.grid(), std::move(out));
}

}  // namespace fsw
