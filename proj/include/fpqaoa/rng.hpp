#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace fpqaoa {

// SplitMix64 (Steele/Lea/Vigna): 64-bit state, one mixed output per step.
// This is the single source of randomness in the project. Normal variates
// come from the trigonometric Box-Muller transform of the uniform stream,
// so identical seeds give identical coefficient streams on every run.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1) with 53 random mantissa bits
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform in [lo, lo + width)
  double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // standard normal, Box-Muller trig form; the sine partner of each pair is
  // cached and returned by the following call
  double next_normal() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    const double u1 = 1.0 - next_double();  // (0, 1], keeps log() finite
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
  }

 private:
  std::uint64_t state_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

// Child seed k of a base seed, defined as the k-th output of SplitMix64
// seeded with base. Closed form, so child streams can be derived in any
// order and in parallel.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t k) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (k + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace fpqaoa
