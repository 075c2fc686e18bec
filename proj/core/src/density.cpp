// Copyright 2026 The rrmeval Authors
// SPDX-License-Identifier: Apache-2.0

#include "rrmeval/density.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "rrmeval/aggregation.hpp"

namespace rrmeval {

namespace {

constexpr double kInvSqrt2Pi = 0.3989422804014327;

double gauss(double z) { return kInvSqrt2Pi * std::exp(-0.5 * z * z); }

double trapezoid(const std::vector<double>& grid, const std::vector<double>& values) {
  double area = 0.0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    area += 0.5 * (values[i] + values[i - 1]) * (grid[i] - grid[i - 1]);
  }
  return area;
}

// Linear-interpolation quantile of a sorted sample vector.
double sorted_quantile(const std::vector<double>& sorted, double p) {
  const double h = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

double silverman_bandwidth(std::span<const double> samples) {
  const std::size_t n = samples.size();
  double sigma = 0.0;
  double iqr = 0.0;
  if (n >= 2) {
    const double mean = std::accumulate(samples.begin(), samples.end(), 0.0) /
                        static_cast<double>(n);
    double ss = 0.0;
    for (double x : samples) ss += (x - mean) * (x - mean);
    sigma = std::sqrt(ss / static_cast<double>(n - 1));

    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    iqr = sorted_quantile(sorted, 0.75) - sorted_quantile(sorted, 0.25);
  }
  const double spread = std::min(sigma, iqr / 1.34);
  const double h = 0.9 * spread * std::pow(static_cast<double>(n), -0.2);
  return std::max(h, kMinBandwidth);
}

}  // namespace

double DensityEstimate::integral() const { return trapezoid(grid, values); }

DensityEstimate kde(std::span<const double> samples, std::size_t grid_size,
                    std::optional<double> bandwidth) {
  if (samples.empty()) throw std::invalid_argument("kde: empty sample set");
  if (grid_size < 2) throw std::invalid_argument("kde: grid needs at least 2 points");
  for (double x : samples) {
    if (!std::isfinite(x) || x < 0.0 || x > 1.0) {
      throw std::invalid_argument("kde: samples must lie in [0,1]");
    }
  }

  DensityEstimate d;
  d.bandwidth = bandwidth.value_or(silverman_bandwidth(samples));
  if (!(d.bandwidth > 0.0)) throw std::invalid_argument("kde: bandwidth must be positive");

  d.grid.resize(grid_size);
  const double step = 1.0 / static_cast<double>(grid_size - 1);
  for (std::size_t i = 0; i < grid_size; ++i) d.grid[i] = static_cast<double>(i) * step;

  // Gaussian kernel with the sample reflected at both boundaries, so mass
  // stays in [0,1] even for boundary-hugging data.
  const double h = d.bandwidth;
  d.values.assign(grid_size, 0.0);
  for (double x : samples) {
    for (std::size_t i = 0; i < grid_size; ++i) {
      const double u = d.grid[i];
      d.values[i] += gauss((u - x) / h) + gauss((u + x) / h) + gauss((u - 2.0 + x) / h);
    }
  }
  const double scale = 1.0 / (static_cast<double>(samples.size()) * h);
  for (double& v : d.values) v *= scale;

  // Trapezoid renormalization removes the tail mass lost past the
  // reflected images when h is large.
  const double area = trapezoid(d.grid, d.values);
  if (area > 0.0) {
    for (double& v : d.values) v /= area;
  }
  return d;
}

DistributionCurves cdf_and_quantile(const DensityEstimate& d) {
  if (d.grid.size() < 2 || d.grid.size() != d.values.size()) {
    throw std::invalid_argument("cdf_and_quantile: invalid density estimate");
  }
  DistributionCurves c;
  c.grid = d.grid;
  c.cdf.resize(d.grid.size(), 0.0);
  for (std::size_t i = 1; i < d.grid.size(); ++i) {
    c.cdf[i] = c.cdf[i - 1] +
               0.5 * (d.values[i] + d.values[i - 1]) * (d.grid[i] - d.grid[i - 1]);
  }
  const double total = c.cdf.back();
  if (total > 0.0) {
    for (double& v : c.cdf) v /= total;
  }
  c.cdf.back() = 1.0;
  return c;
}

double DistributionCurves::quantile(double p) const {
  p = std::clamp(p, 0.0, 1.0);
  auto it = std::lower_bound(cdf.begin(), cdf.end(), p);
  if (it == cdf.begin()) return grid.front();
  if (it == cdf.end()) return grid.back();
  const auto i = static_cast<std::size_t>(it - cdf.begin());
  const double lo = cdf[i - 1];
  const double hi = cdf[i];
  if (hi == lo) return grid[i - 1];  // flat stretch: lowest grid point
  if (p == lo) return grid[i - 1];
  const double t = (p - lo) / (hi - lo);
  return grid[i - 1] + t * (grid[i] - grid[i - 1]);
}

std::string_view to_string(GaugeMode m) {
  switch (m) {
    case GaugeMode::DiscreteOwa: return "discrete-owa";
    case GaugeMode::SmoothedQuantileOwa: return "smoothed-quantile-owa";
    case GaugeMode::LiteralProduct: return "literal-product";
  }
  return "unknown";
}

std::optional<GaugeMode> gauge_mode_from_string(std::string_view s) {
  if (s == "discrete-owa") return GaugeMode::DiscreteOwa;
  if (s == "smoothed-quantile-owa") return GaugeMode::SmoothedQuantileOwa;
  if (s == "literal-product") return GaugeMode::LiteralProduct;
  return std::nullopt;
}

namespace {

// Weight curve over the score axis: the quantifier density
// alpha*(1-u)^(alpha-1), or the rank-fraction step curve for raw weights.
// Decreasing for alpha > 1, matching pessimistic weighting.
std::vector<double> weight_curve_on(const std::vector<double>& grid, const OwaConfig& cfg) {
  std::vector<double> w(grid.size());
  if (cfg.has_raw_weights()) {
    const std::size_t n = cfg.raw_weights.size();
    for (std::size_t i = 0; i < grid.size(); ++i) {
      auto k = static_cast<std::size_t>(grid[i] * static_cast<double>(n));
      if (k >= n) k = n - 1;
      w[i] = cfg.raw_weights[k] * static_cast<double>(n);
    }
  } else {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      w[i] = cfg.alpha * std::pow(1.0 - grid[i], cfg.alpha - 1.0);
    }
  }
  return w;
}

double discrete_owa_score(std::span<const double> samples, const OwaConfig& cfg) {
  std::vector<double> values(samples.begin(), samples.end());
  const std::size_t n = values.size();
  if (cfg.has_raw_weights()) {
    if (cfg.raw_weights.size() != n) {
      throw std::domain_error("gauge: raw OWA weight count does not match sample count");
    }
    return owa(OwaWeights{cfg.raw_weights}, std::move(values));
  }
  return owa(owa_weights_from_quantifier(cfg.alpha, n), std::move(values));
}

double smoothed_quantile_score(const DistributionCurves& curves, const OwaConfig& cfg,
                               std::size_t cells) {
  // sum over p-cells of the exact quantifier increment times the quantile at
  // the cell midpoint
  if (cfg.has_raw_weights()) {
    const std::size_t n = cfg.raw_weights.size();
    double score = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double mid = (static_cast<double>(k) + 0.5) / static_cast<double>(n);
      score += cfg.raw_weights[k] * curves.quantile(mid);
    }
    return score;
  }
  const OwaWeights w = owa_weights_from_quantifier(cfg.alpha, cells);
  double score = 0.0;
  for (std::size_t k = 0; k < cells; ++k) {
    const double mid = (static_cast<double>(k) + 0.5) / static_cast<double>(cells);
    score += w.values[k] * curves.quantile(mid);
  }
  return score;
}

}  // namespace

GaugeScore gauge_score(std::span<const double> samples, const OwaConfig& cfg, GaugeMode mode,
                       std::size_t grid_size) {
  if (samples.empty()) throw std::invalid_argument("gauge: empty sample set");
  if (!cfg.has_raw_weights() && !(cfg.alpha >= 1.0)) {
    throw std::invalid_argument("gauge: quantifier alpha must be >= 1");
  }

  GaugeScore g;
  g.mode = mode;
  g.sample_count = samples.size();
  g.density = kde(samples, grid_size);
  g.weight_curve = weight_curve_on(g.density.grid, cfg);

  const auto [lo, hi] = std::minmax_element(samples.begin(), samples.end());
  switch (mode) {
    case GaugeMode::DiscreteOwa:
      g.score = discrete_owa_score(samples, cfg);
      break;
    case GaugeMode::SmoothedQuantileOwa:
      if (*lo == *hi) {
        // degenerate multiset: the quantile function is the constant itself
        g.score = *lo;
      } else {
        g.score = smoothed_quantile_score(cdf_and_quantile(g.density), cfg, grid_size);
      }
      break;
    case GaugeMode::LiteralProduct: {
      std::vector<double> product(g.density.values.size());
      for (std::size_t i = 0; i < product.size(); ++i) {
        product[i] = g.density.values[i] * g.weight_curve[i];
      }
      g.score = std::clamp(trapezoid(g.density.grid, product), 0.0, 1.0);
      g.note = "figure-literal, interpretation uncertain";
      break;
    }
  }
  g.score = std::clamp(g.score, 0.0, 1.0);
  return g;
}

GaugeScore gauge_score(std::span<const double> samples, const OwaConfig& cfg) {
  return gauge_score(samples, cfg, cfg.mode);
}

}  // namespace rrmeval
