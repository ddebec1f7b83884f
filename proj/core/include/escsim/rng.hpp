#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace escsim {

/// Deterministic stream of standard-normal draws.
///
/// mt19937_64 output is pinned by the standard, and the Box-Muller transform
/// below uses only elementary operations, so a given seed produces the same
/// sequence on every platform. std::normal_distribution is deliberately
/// avoided: its draw sequence is implementation-defined.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : rng_(seed) {}

  /// One N(0,1) draw.
  double next() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform_open();   // (0,1]
    const double u2 = uniform_half();   // [0,1)
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * kPi * u2;
    spare_ = r * std::sin(phi);
    has_spare_ = true;
    return r * std::cos(phi);
  }

 private:
  static constexpr double kPi = 3.14159265358979323846;

  // 53-bit mantissa draws; +1 keeps u1 away from zero so log() is finite.
  double uniform_open() { return static_cast<double>((rng_() >> 11) + 1) * 0x1.0p-53; }
  double uniform_half() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  std::mt19937_64 rng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// splitmix64 mixing step; used to combine seeds without trivial collisions.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace escsim
