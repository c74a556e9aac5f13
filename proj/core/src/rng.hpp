#pragma once

// Internal deterministic RNG (splitmix64 + hand-rolled distributions) so
// seeded runs produce identical streams on any platform.

#include <cmath>
#include <cstdint>

#include "harmonics/common.hpp"

namespace harmonics::detail {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  long long uniform_int(long long a, long long b) {
    return a + static_cast<long long>(next_u64() % static_cast<std::uint64_t>(b - a + 1));
  }

  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  Complex normal_complex() { return Complex(normal(), normal()) / std::sqrt(2.0); }

 private:
  std::uint64_t state_;
};

}  // namespace harmonics::detail
