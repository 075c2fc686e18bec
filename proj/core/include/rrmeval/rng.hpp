// Copyright 2026 The rrmeval Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace rrmeval {

/// Deterministic, portable PRNG (splitmix64). Simulation code derives one
/// stream per target from the scenario seed so that runs are reproducible
/// bit-for-bit regardless of platform or standard library.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double next_range(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Uniform integer in [0, n) for n > 0.
  std::uint64_t next_below(std::uint64_t n) { return next() % n; }

  bool next_bernoulli(double p) { return next_double() < p; }

  /// Derive an independent substream keyed on `key`. Substreams of the same
  /// generator with distinct keys never share state.
  SplitMix64 stream(std::uint64_t key) const {
    std::uint64_t z = seed_ ^ (0x632BE59BD9B4E019ull * (key + 1));
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return SplitMix64(z ^ (z >> 31));
  }

  static constexpr const char* name() { return "splitmix64"; }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace rrmeval
