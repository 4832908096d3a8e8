#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace spincat {

// SplitMix64 (Steele, Lea & Burns 2014). Chosen for trivially splittable,
// platform-stable streams: trajectory i uses the state seed + (i+1)*GAMMA,
// so ensembles replay bit-identically for a fixed seed on a given platform
// and trajectories can be generated independently in any order.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(seed + (index + 1) * kGamma);
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += kGamma);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in (0, 1], 53-bit mantissa.
  double next_uniform() { return ((next() >> 11) + 1.0) * 0x1.0p-53; }

  // Standard-normal pair via Box-Muller.
  std::pair<double, double> next_gaussian_pair() {
    const double u1 = next_uniform();
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(t), r * std::sin(t)};
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
  std::uint64_t state_;
};

}  // namespace spincat
