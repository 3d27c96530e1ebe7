#pragma once

#include <cstddef>
#include <memory>

#include "ccshaper/types.hpp"

namespace ccs {

/// Complex transform of fixed length (FFTW behind the scenes, unnormalized).
/// Plans are built once on aligned internal buffers, so repeated transforms
/// are cheap and bit-stable.
class Fft {
 public:
  enum class Direction { forward, backward };

  Fft(std::size_t n, Direction dir);
  ~Fft();
  Fft(Fft&&) noexcept;
  Fft& operator=(Fft&&) noexcept;
  Fft(const Fft&) = delete;
  Fft& operator=(const Fft&) = delete;

  void transform(const Complex* in, Complex* out);
  std::size_t size() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace ccs
