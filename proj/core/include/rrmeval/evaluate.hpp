// Copyright 2026 The rrmeval Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rrmeval/density.hpp"
#include "rrmeval/model.hpp"

namespace rrmeval {

struct EvaluationOptions {
  /// Overrides every leaf's configured gauge mode when set.
  std::optional<GaugeMode> mode;
  /// Overrides every leaf's configured pessimism alpha when set.
  std::optional<double> alpha;
  std::size_t grid_size = kDefaultGridSize;
};

/// Plot-ready curves for one (leaf, alternative): KDE over the metric space
/// (rescaled to [0,1]), KDE over the normalized criterion space, and the OWA
/// weight curve, all on the same grid.
struct LeafCurves {
  std::vector<double> grid;
  std::vector<double> metric_density;
  std::vector<double> criterion_density;
  std::vector<double> weight;
};

struct LeafGauge {
  double score = 0.0;
  GaugeMode mode = GaugeMode::DiscreteOwa;
  std::size_t sample_count = 0;
  double bandwidth = 0.0;
  std::string note;
};

/// Scores for one tree node across all alternatives; leaves carry gauges and
/// curves in addition.
struct NodeResult {
  std::string id;
  std::string label;
  std::string path;  // slash-joined ids from the root
  int depth = 0;
  bool leaf = false;
  std::string metric_id;  // leaves only
  std::map<std::string, double> scores;          // alternative id -> [0,1]
  std::map<std::string, LeafGauge> gauges;       // leaves only
  std::map<std::string, LeafCurves> curves;      // leaves only
};

struct EvaluationResult {
  std::vector<Alternative> alternatives;
  std::vector<NodeResult> nodes;  // depth-first (pre-order)
  std::optional<GaugeMode> mode_override;
  std::optional<double> alpha_override;
  int clamp_warnings = 0;  // samples outside the utility breakpoint span

  const NodeResult* root() const { return nodes.empty() ? nullptr : &nodes.front(); }
  const NodeResult* find_node(const std::string& id) const;
  double root_score(const std::string& alternative_id) const;
};

/// Evaluates every alternative present in the measurement set against the
/// model: leaf gauges from normalized samples, Choquet aggregation up the
/// tree. Throws std::invalid_argument when validate_model(model,
/// measurements) reports errors.
EvaluationResult evaluate(const PreferenceModel& model, const MeasurementSet& measurements,
                          const EvaluationOptions& options = {});

}  // namespace rrmeval
