#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace mqc {

// Deterministic seeded source for all sampling. Uniform doubles are derived
// from raw 64-bit draws rather than std distributions, so outcome traces are
// bit-identical for a given seed regardless of standard library version.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Cumulative-probability inversion over outcomes in ascending index order.
  int sample(std::span<const double> probabilities) {
    const double u = uniform01();
    double acc = 0.0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
      acc += probabilities[i];
      if (u < acc) return static_cast<int>(i);
    }
    // u landed in the rounding slack above the final cumulative sum.
    return static_cast<int>(probabilities.size()) - 1;
  }

  // Fair coin; avoids burning a full double draw.
  bool coin() { return (engine_() & 1u) != 0; }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mqc
