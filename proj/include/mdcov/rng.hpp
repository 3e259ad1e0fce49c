#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

namespace mdcov {

// SplitMix64 (Steele, Lea & Flood). The integer path (next_u64, next_below,
// permutation) is platform-independent; floating-point draws are
// reproducible per platform. Independent streams for subtasks are derived
// by mixing (seed, stream), so results never depend on scheduling order.
class Rng {
 public:
  static constexpr const char* kAlgorithm = "splitmix64";
  static constexpr const char* kVersion = "1";

  explicit Rng(std::uint64_t seed) : state_(seed) {}

  Rng(std::uint64_t seed, std::uint64_t stream)
      : state_(mix(seed + 0x9e3779b97f4a7c15ULL) ^
               mix(stream ^ 0x6a09e667f3bcc909ULL)) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    return mix_steps(z);
  }

  // Unbiased draw in [0, bound) by rejection; bound > 0.
  std::uint64_t next_below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform in [0, 1), 53-bit resolution.
  double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller (one deviate per two uniforms).
  double next_normal() {
    double u1;
    do {
      u1 = next_double();
    } while (u1 <= 0.0);
    double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(6.283185307179586476925287 * u2);
  }

  // Uniform random permutation of {0, ..., n-1} by Fisher-Yates.
  std::vector<std::size_t> permutation(std::size_t n) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    for (std::size_t i = n; i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(p[i - 1], p[j]);
    }
    return p;
  }

 private:
  static std::uint64_t mix_steps(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  static std::uint64_t mix(std::uint64_t z) {
    return mix_steps(z + 0x9e3779b97f4a7c15ULL);
  }

  std::uint64_t state_;
};

}  // namespace mdcov
