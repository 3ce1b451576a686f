#pragma once

#include <cmath>
#include <cstdint>

#include "ftqkd/pulse.hpp"

namespace ftqkd {

// Deterministic splitmix64 generator with cheap keyed substreams.
//
// Reproducibility contract: round k of a session always draws from
// RandomStream(master_seed, k), so results depend only on (seed, round
// index) and never on scheduling or on how rounds are split across
// workers. The standard <random> engines/distributions are avoided on
// purpose: their outputs are not bit-stable across standard library
// implementations, and this project promises byte-stable results for a
// fixed seed.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : state_(mix(seed ^ kDomain)) {}

  // Substream keyed by (master seed, stream index): distinct indices give
  // statistically independent streams under the same master seed.
  RandomStream(std::uint64_t master_seed, std::uint64_t stream_index)
      : state_(mix(mix(master_seed ^ kDomain) + (stream_index + 1) * kGamma)) {}

  std::uint64_t next_u64() {
    state_ += kGamma;
    return mix(state_);
  }

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Unbiased integer in [0, n) via the multiply-shift reduction.
  std::uint64_t uniform_index(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Standard normal deviate (Box-Muller, cosine branch). Always consumes
  // exactly two uniforms, keeping the per-call draw count fixed.
  double normal() {
    double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  }

  // Gaussian draw parameterized by the library-wide 1/e half-width
  // convention (std = halfwidth/sqrt(2)).
  double gaussian_halfwidth(double center, double halfwidth) {
    return center + halfwidth * kHalfwidthToStd * normal();
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
  static constexpr std::uint64_t kDomain = 0x6A09E667F3BCC909ULL;
  static constexpr double kTwoPi = 6.28318530717958647693;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

// Deterministic derived seed for sweep rows and other child sessions; the
// offset keeps these far away from per-round substream indices.
inline std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index) {
  return RandomStream(master_seed, 0x5EEDBA5E00000000ULL + index).next_u64();
}

}  // namespace ftqkd
