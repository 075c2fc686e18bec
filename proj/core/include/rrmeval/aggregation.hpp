// Copyright 2026 The rrmeval Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rrmeval/validation.hpp"

namespace rrmeval {

inline constexpr double kCapacityTolerance = 1e-9;

/// A 2-additive fuzzy measure in Moebius representation: one coefficient per
/// criterion and one per unordered pair of criteria. The induced capacity is
/// mu(S) = sum_{i in S} m_i + sum_{{i,j} subset S} m_ij.
///
/// A valid capacity satisfies
///   sum_i m_i + sum_{i<j} m_ij = 1          (normalization)
///   m_i + sum_{j != i} min(0, m_ij) >= 0    (monotonicity, for every i)
class MobiusCapacity2Add {
 public:
  explicit MobiusCapacity2Add(std::size_t n);

  /// Uniform additive capacity: m_i = 1/n, all interactions zero.
  static MobiusCapacity2Add uniform(std::size_t n);

  std::size_t size() const { return n_; }

  double singleton(std::size_t i) const;
  void set_singleton(std::size_t i, double value);

  double pair(std::size_t i, std::size_t j) const;
  void set_pair(std::size_t i, std::size_t j, double value);

  double coefficient_sum() const;

  /// Scale all coefficients by 1/coefficient_sum(). Monotonicity is
  /// preserved; throws std::domain_error when the sum is not positive.
  void normalize();

  const std::vector<double>& singletons() const { return singletons_; }

 private:
  std::size_t pair_index(std::size_t i, std::size_t j) const;

  std::size_t n_;
  std::vector<double> singletons_;
  std::vector<double> pairs_;  // packed upper triangle, i < j
};

/// Checks normalization and per-criterion monotonicity, reporting margins.
/// Criteria are numbered from 1 in messages.
ValidationReport validate_capacity(const MobiusCapacity2Add& c,
                                   double tolerance = kCapacityTolerance);

/// 2-additive Choquet integral in Moebius form:
///   C(x) = sum_i m_i x_i + sum_{i<j} m_ij min(x_i, x_j).
/// Throws std::invalid_argument on dimension mismatch.
double choquet_2add(const MobiusCapacity2Add& c, std::span<const double> x);

/// Expands the Moebius representation into the full capacity table over all
/// 2^n subsets; entry at bitmask S is mu(S). Requires n <= 20.
std::vector<double> capacity_from_mobius(const MobiusCapacity2Add& c);

/// Classical sort-based Choquet integral over an arbitrary capacity given as
/// a 2^n table (bit i of the index selects criterion i). Serves as the
/// brute-force cross-check for choquet_2add. A non-monotone capacity is
/// reported as a warning and the integral is still computed.
double choquet_general(std::span<const double> capacity, std::span<const double> x,
                       ValidationReport* report = nullptr);

/// Shapley importance of each criterion: phi_i = m_i + 1/2 sum_{j!=i} m_ij.
/// For a valid capacity the components sum to 1.
std::vector<double> shapley(const MobiusCapacity2Add& c);

/// OWA weights, applied to inputs sorted ascending (worst evaluation first).
struct OwaWeights {
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
};

ValidationReport validate_owa_weights(const OwaWeights& w,
                                      double tolerance = kCapacityTolerance);

/// Ordered weighted average: sorts `samples` ascending and returns
/// sum_k w_k s_(k). Throws std::invalid_argument when the sample set is
/// empty or the weight count does not match.
double owa(const OwaWeights& w, std::vector<double> samples);

/// Weights from the quantifier Q(p) = 1 - (1-p)^alpha:
/// w_k = Q(k/n) - Q((k-1)/n). alpha = 1 gives uniform weights; alpha > 1
/// puts more weight on the worst inputs. alpha < 1 is rejected
/// (optimistic weightings are supported only as explicit raw vectors).
OwaWeights owa_weights_from_quantifier(double alpha, std::size_t n);

}  // namespace rrmeval
