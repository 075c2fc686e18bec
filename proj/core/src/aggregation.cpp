// Copyright 2026 The rrmeval Authors
// SPDX-License-Identifier: Apache-2.0

#include "rrmeval/aggregation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rrmeval {

MobiusCapacity2Add::MobiusCapacity2Add(std::size_t n)
    : n_(n), singletons_(n, 0.0), pairs_(n >= 2 ? n * (n - 1) / 2 : 0, 0.0) {}

MobiusCapacity2Add MobiusCapacity2Add::uniform(std::size_t n) {
  if (n == 0) throw std::invalid_argument("capacity needs at least one criterion");
  MobiusCapacity2Add c(n);
  std::fill(c.singletons_.begin(), c.singletons_.end(), 1.0 / static_cast<double>(n));
  return c;
}

std::size_t MobiusCapacity2Add::pair_index(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  if (j >= n_ || i == j) throw std::out_of_range("pair index out of range");
  // packed upper triangle, rows i of length n-1-i
  return i * n_ - i * (i + 1) / 2 + (j - i - 1);
}

double MobiusCapacity2Add::singleton(std::size_t i) const {
  return singletons_.at(i);
}

void MobiusCapacity2Add::set_singleton(std::size_t i, double value) {
  singletons_.at(i) = value;
}

double MobiusCapacity2Add::pair(std::size_t i, std::size_t j) const {
  return pairs_[pair_index(i, j)];
}

void MobiusCapacity2Add::set_pair(std::size_t i, std::size_t j, double value) {
  pairs_[pair_index(i, j)] = value;
}

double MobiusCapacity2Add::coefficient_sum() const {
  double s = std::accumulate(singletons_.begin(), singletons_.end(), 0.0);
  return std::accumulate(pairs_.begin(), pairs_.end(), s);
}

void MobiusCapacity2Add::normalize() {
  const double s = coefficient_sum();
  if (!(s > 0.0)) throw std::domain_error("capacity coefficient sum must be positive");
  for (double& v : singletons_) v /= s;
  for (double& v : pairs_) v /= s;
}

ValidationReport validate_capacity(const MobiusCapacity2Add& c, double tolerance) {
  ValidationReport report;
  const double sum = c.coefficient_sum();
  if (std::abs(sum - 1.0) > tolerance) {
    std::ostringstream msg;
    msg << "coefficients sum to " << sum << ", expected 1";
    report.add_error("normalization", msg.str());
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    double margin = c.singleton(i);
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j == i) continue;
      margin += std::min(0.0, c.pair(std::min(i, j), std::max(i, j)));
    }
    if (margin < -tolerance) {
      std::ostringstream msg;
      msg << "monotonicity violated on criterion " << (i + 1) << " (margin " << margin << ")";
      report.add_error("criterion " + std::to_string(i + 1), msg.str());
    }
  }
  return report;
}

double choquet_2add(const MobiusCapacity2Add& c, std::span<const double> x) {
  if (x.size() != c.size()) {
    throw std::invalid_argument("choquet_2add: input dimension does not match capacity");
  }
  double value = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    value += c.singleton(i) * x[i];
  }
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      value += c.pair(i, j) * std::min(x[i], x[j]);
    }
  }
  return value;
}

std::vector<double> capacity_from_mobius(const MobiusCapacity2Add& c) {
  const std::size_t n = c.size();
  if (n > 20) throw std::invalid_argument("capacity table limited to 20 criteria");
  std::vector<double> mu(std::size_t{1} << n, 0.0);
  for (std::size_t mask = 1; mask < mu.size(); ++mask) {
    double v = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask & (std::size_t{1} << i))) continue;
      v += c.singleton(i);
      for (std::size_t j = i + 1; j < n; ++j) {
        if (mask & (std::size_t{1} << j)) v += c.pair(i, j);
      }
    }
    mu[mask] = v;
  }
  return mu;
}

namespace {

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

std::size_t subset_count_to_n(std::size_t size) {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < size) ++n;
  return n;
}

}  // namespace

double choquet_general(std::span<const double> capacity, std::span<const double> x,
                       ValidationReport* report) {
  if (!is_power_of_two(capacity.size())) {
    throw std::invalid_argument("capacity table size must be a power of two");
  }
  const std::size_t n = subset_count_to_n(capacity.size());
  if (x.size() != n) {
    throw std::invalid_argument("choquet_general: input dimension does not match capacity");
  }
  const std::size_t full = capacity.size() - 1;
  if (std::abs(capacity[0]) > kCapacityTolerance ||
      std::abs(capacity[full] - 1.0) > kCapacityTolerance) {
    throw std::invalid_argument("capacity must satisfy mu(empty)=0 and mu(N)=1");
  }
  if (report != nullptr) {
    for (std::size_t mask = 0; mask <= full; ++mask) {
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t with = mask | (std::size_t{1} << i);
        if (with != mask && capacity[with] < capacity[mask] - kCapacityTolerance) {
          report->add_warning("capacity", "set function is not monotone");
          mask = full;  // one warning is enough
          break;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });

  // survivor set after removing the k smallest inputs
  double value = 0.0;
  double prev = 0.0;
  std::size_t survivors = full;
  for (std::size_t k = 0; k < n; ++k) {
    value += (x[order[k]] - prev) * capacity[survivors];
    prev = x[order[k]];
    survivors &= ~(std::size_t{1} << order[k]);
  }
  return value;
}

std::vector<double> shapley(const MobiusCapacity2Add& c) {
  std::vector<double> phi(c.size(), 0.0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    phi[i] = c.singleton(i);
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j == i) continue;
      phi[i] += 0.5 * c.pair(std::min(i, j), std::max(i, j));
    }
  }
  return phi;
}

ValidationReport validate_owa_weights(const OwaWeights& w, double tolerance) {
  ValidationReport report;
  if (w.values.empty()) {
    report.add_error("owa", "weight vector is empty");
    return report;
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < w.values.size(); ++k) {
    if (w.values[k] < 0.0) {
      report.add_error("owa", "weight " + std::to_string(k + 1) + " is negative");
    }
    sum += w.values[k];
  }
  if (std::abs(sum - 1.0) > tolerance) {
    std::ostringstream msg;
    msg << "weights sum to " << sum << ", expected 1";
    report.add_error("owa", msg.str());
  }
  return report;
}

double owa(const OwaWeights& w, std::vector<double> samples) {
  if (samples.empty()) throw std::invalid_argument("owa: empty sample set");
  if (w.values.size() != samples.size()) {
    throw std::invalid_argument("owa: weight count does not match sample count");
  }
  std::stable_sort(samples.begin(), samples.end());
  double value = 0.0;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    value += w.values[k] * samples[k];
  }
  return value;
}

OwaWeights owa_weights_from_quantifier(double alpha, std::size_t n) {
  if (!(alpha >= 1.0)) {
    throw std::invalid_argument("quantifier alpha must be >= 1 (use raw weights otherwise)");
  }
  if (n == 0) throw std::invalid_argument("weight count must be positive");
  const auto quantifier = [alpha](double p) { return 1.0 - std::pow(1.0 - p, alpha); };
  OwaWeights w;
  w.values.resize(n);
  double prev = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    const double q = quantifier(static_cast<double>(k) / static_cast<double>(n));
    w.values[k - 1] = q - prev;
    prev = q;
  }
  return w;
}

}  // namespace rrmeval
