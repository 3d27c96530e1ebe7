#pragma once

#include <Eigen/Dense>

#include <cstdint>

#include "ccshaper/types.hpp"

namespace ccs::rng {

// Counter-based generator: a splitmix64 finalizer over (seed, stream, index).
// Any draw is addressable directly, so symbol/trial generation is
// reproducible for a given seed regardless of evaluation order.

inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

inline std::uint64_t draw(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
  const std::uint64_t key = mix64(seed + kGolden * (stream + 1));
  return mix64(key + kGolden * (index + 1));
}

/// Unit-power QPSK symbol; I from bit 0, Q from bit 1 (Gray mapped).
inline Complex qpsk(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  const std::uint64_t bits = draw(seed, stream, index);
  constexpr double a = 0.70710678118654752440;  // 1/sqrt(2)
  return Complex((bits & 1u) ? a : -a, (bits & 2u) ? a : -a);
}

inline Eigen::VectorXcd qpsk_vector(std::uint64_t seed, std::uint64_t stream, Eigen::Index n) {
  Eigen::VectorXcd d(n);
  for (Eigen::Index i = 0; i < n; ++i)
    d(i) = qpsk(seed, stream, static_cast<std::uint64_t>(i));
  return d;
}

}  // namespace ccs::rng
