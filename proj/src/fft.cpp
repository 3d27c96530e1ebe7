#include "ccshaper/fft.hpp"

#include <fftw3.h>

#include <cstring>

namespace ccs {

struct Fft::Impl {
  std::size_t n = 0;
  fftw_complex* in = nullptr;
  fftw_complex* out = nullptr;
  fftw_plan plan = nullptr;

  ~Impl() {
    if (plan) fftw_destroy_plan(plan);
    if (in) fftw_free(in);
    if (out) fftw_free(out);
  }
};

Fft::Fft(std::size_t n, Direction dir) : impl_(std::make_unique<Impl>()) {
  if (n == 0) throw ContractError("fft: zero length");
  impl_->n = n;
  impl_->in = fftw_alloc_complex(n);
  impl_->out = fftw_alloc_complex(n);
  impl_->plan = fftw_plan_dft_1d(static_cast<int>(n), impl_->in, impl_->out,
                                 dir == Direction::forward ? FFTW_FORWARD : FFTW_BACKWARD,
                                 FFTW_ESTIMATE);
  if (!impl_->plan) throw NumericalError("fft: failed to create plan");
}

Fft::~Fft() = default;
Fft::Fft(Fft&&) noexcept = default;
Fft& Fft::operator=(Fft&&) noexcept = default;

void Fft::transform(const Complex* in, Complex* out) {
  std::memcpy(impl_->in, in, impl_->n * sizeof(fftw_complex));
  fftw_execute(impl_->plan);
  std::memcpy(out, impl_->out, impl_->n * sizeof(fftw_complex));
}

std::size_t Fft::size() const { return impl_->n; }

}  // namespace ccs
