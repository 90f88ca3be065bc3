#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace triptych {

// Counter-based generator: the k-th draw of stream `stream` under `seed` is a
// pure function of (seed, stream, k). Uses the SplitMix64 finalizer.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : key_(mix(seed ^ mix(stream + 0x9e3779b97f4a7c15ULL))) {}

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next() { return mix(key_ + 0x632be59bd9b4e019ULL * ++counter_); }

  // Uniform on [0,1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform on (0,1).
  double open_uniform() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

  int bernoulli(double p) { return uniform() < p ? 1 : 0; }

  // Standard normal by Box–Muller; consumes two draws per call.
  double normal() {
    const double u1 = open_uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace triptych
