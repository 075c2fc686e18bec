// Copyright 2026 The rrmeval Authors
// SPDX-License-Identifier: Apache-2.0
//
// Test-only oracles, independent of the implementation paths they check.

#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "rrmeval/aggregation.hpp"
#include "rrmeval/rng.hpp"

namespace rrmeval::testing {

/// Random valid 2-additive capacity: rejection-sample until the monotonicity
/// margins are nonnegative, then scale to sum 1 (scaling by a positive
/// constant preserves monotonicity).
inline MobiusCapacity2Add random_capacity(SplitMix64& rng, std::size_t n) {
  for (;;) {
    MobiusCapacity2Add c(n);
    for (std::size_t i = 0; i < n; ++i) c.set_singleton(i, rng.next_range(0.05, 1.0));
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        c.set_pair(i, j, rng.next_range(-0.3, 0.7));
      }
    }
    bool monotone = true;
    for (std::size_t i = 0; i < n && monotone; ++i) {
      double margin = c.singleton(i);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        margin += std::min(0.0, c.pair(std::min(i, j), std::max(i, j)));
      }
      monotone = margin >= 0.0;
    }
    if (!monotone || c.coefficient_sum() < 0.2) continue;
    c.normalize();
    return c;
  }
}

inline std::vector<double> random_scores(SplitMix64& rng, std::size_t n) {
  std::vector<double> x(n);
  for (double& v : x) v = rng.next_double();
  return x;
}

/// Shapley values by exhaustive permutation averaging over the induced
/// capacity table: phi_i = mean over orderings of the marginal contribution
/// of i. Exact for small n; the formula on Moebius coefficients must match.
inline std::vector<double> permutation_shapley(const MobiusCapacity2Add& c) {
  const std::size_t n = c.size();
  const std::vector<double> mu = capacity_from_mobius(c);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});

  std::vector<double> phi(n, 0.0);
  std::size_t permutations = 0;
  std::sort(order.begin(), order.end());
  do {
    std::size_t coalition = 0;
    for (std::size_t i : order) {
      const std::size_t with = coalition | (std::size_t{1} << i);
      phi[i] += mu[with] - mu[coalition];
      coalition = with;
    }
    ++permutations;
  } while (std::next_permutation(order.begin(), order.end()));

  for (double& v : phi) v /= static_cast<double>(permutations);
  return phi;
}

}  // namespace rrmeval::testing
