// Copyright 2026 The rrmeval Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rrmeval {

inline constexpr std::size_t kDefaultGridSize = 512;
inline constexpr double kMinBandwidth = 1e-3;

/// Kernel density estimate on a uniform grid over [0,1], trapezoid-normalized
/// so the integral is 1.
struct DensityEstimate {
  std::vector<double> grid;
  std::vector<double> values;
  double bandwidth = 0.0;

  double integral() const;  // trapezoidal, over [0,1]
};

/// Gaussian KDE with reflection at 0 and 1. When no bandwidth is given,
/// Silverman's rule h = 0.9 min(sigma, IQR/1.34) n^(-1/5) is used, floored
/// at kMinBandwidth. Throws std::invalid_argument on an empty sample set.
DensityEstimate kde(std::span<const double> samples,
                    std::size_t grid_size = kDefaultGridSize,
                    std::optional<double> bandwidth = std::nullopt);

/// CDF of a density estimate plus its piecewise-linear inverse.
struct DistributionCurves {
  std::vector<double> grid;
  std::vector<double> cdf;  // nondecreasing, 0 at grid front, 1 at grid back

  /// Quantile at p in [0,1]; flat CDF stretches resolve to the lowest grid
  /// point.
  double quantile(double p) const;
};

DistributionCurves cdf_and_quantile(const DensityEstimate& d);

/// How a leaf turns a sample multiset into one score.
enum class GaugeMode {
  DiscreteOwa,         // OWA on the raw sorted samples (exact; default)
  SmoothedQuantileOwa, // integral of w(p) * F^-1(p) with F from the KDE
  LiteralProduct,      // integral of density * weight curve on the score axis
};

std::string_view to_string(GaugeMode m);
std::optional<GaugeMode> gauge_mode_from_string(std::string_view s);

/// Per-leaf OWA configuration: either a pessimism exponent alpha >= 1 for
/// the quantifier Q(p) = 1 - (1-p)^alpha, or an explicit weight vector.
struct OwaConfig {
  std::string id;
  double alpha = 1.0;
  std::vector<double> raw_weights;  // when nonempty, overrides alpha
  GaugeMode mode = GaugeMode::DiscreteOwa;

  bool has_raw_weights() const { return !raw_weights.empty(); }
};

/// A leaf evaluation in [0,1] together with the curves that explain it.
struct GaugeScore {
  double score = 0.0;
  GaugeMode mode = GaugeMode::DiscreteOwa;
  DensityEstimate density;           // KDE of the (normalized) samples
  std::vector<double> weight_curve;  // OWA weight curve on the same grid
  std::size_t sample_count = 0;
  std::string note;  // set for interpretations flagged as uncertain
};

/// Scores a multiset of normalized samples (each in [0,1]) under the given
/// OWA configuration and mode. Throws std::invalid_argument on an empty
/// sample set, and std::domain_error when raw weights are configured but
/// their count does not match the sample count in discrete mode.
GaugeScore gauge_score(std::span<const double> samples, const OwaConfig& cfg,
                       GaugeMode mode, std::size_t grid_size = kDefaultGridSize);

/// Same, using the mode stored in the configuration.
GaugeScore gauge_score(std::span<const double> samples, const OwaConfig& cfg);

}  // namespace rrmeval
