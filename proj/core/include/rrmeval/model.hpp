// Copyright 2026 The rrmeval Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rrmeval/aggregation.hpp"
#include "rrmeval/density.hpp"
#include "rrmeval/types.hpp"
#include "rrmeval/utility.hpp"
#include "rrmeval/validation.hpp"

namespace rrmeval {

/// One candidate under evaluation (an RRM algorithm).
struct Alternative {
  std::string id;
  std::string label;
};

struct MetricDef {
  std::string id;
  std::string label;
  Direction direction = Direction::HigherBetter;
  double range_lo = 0.0;
  double range_hi = 1.0;
  std::string units;  // "fraction", "s", ...

  bool in_range(double v) const { return v >= range_lo && v <= range_hi; }
};

/// One raw measurement with provenance.
struct Sample {
  double value = 0.0;
  std::string scenario_id;
  std::string track_id;  // empty for scenario-level metrics
};

/// Raw per-(alternative, metric) sample multisets. Kept unaveraged; sample
/// counts may differ across alternatives.
class MeasurementSet {
 public:
  using Key = std::pair<std::string, std::string>;  // (alternative_id, metric_id)

  void add(const std::string& alternative_id, const std::string& metric_id, Sample s);

  const std::vector<Sample>* find(const std::string& alternative_id,
                                  const std::string& metric_id) const;

  std::vector<double> values(const std::string& alternative_id,
                             const std::string& metric_id) const;

  /// Alternative ids present in the set, sorted.
  std::vector<std::string> alternative_ids() const;

  const std::map<Key, std::vector<Sample>>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t total_samples() const;

  bool operator==(const MeasurementSet&) const = default;

 private:
  std::map<Key, std::vector<Sample>> entries_;
};

/// A node of the hierarchical criteria tree. Leaves bind a metric to a
/// utility function and an OWA configuration; aggregates combine their
/// children through a 2-additive Choquet integral whose capacity is indexed
/// by child position.
struct CriteriaNode {
  std::string id;
  std::string label;

  // leaf fields
  std::string metric_id;
  std::string utility_id;
  std::string owa_id;

  // aggregate fields
  std::vector<CriteriaNode> children;
  MobiusCapacity2Add capacity{0};

  bool is_leaf() const { return children.empty(); }

  static CriteriaNode leaf(std::string id, std::string label, std::string metric_id,
                           std::string utility_id, std::string owa_id);
  static CriteriaNode aggregate(std::string id, std::string label,
                                std::vector<CriteriaNode> children,
                                MobiusCapacity2Add capacity);
  /// Aggregate with the uniform placeholder capacity for its child count.
  static CriteriaNode aggregate(std::string id, std::string label,
                                std::vector<CriteriaNode> children);
};

/// Pre-order traversal; visits each node exactly once. The callback receives
/// the node, its depth and its slash-joined id path.
void visit_tree(const CriteriaNode& root,
                const std::function<void(const CriteriaNode&, int depth,
                                         const std::string& path)>& fn);

std::size_t leaf_count(const CriteriaNode& root);

/// Everything needed to evaluate alternatives: metric definitions, utility
/// functions, OWA configurations and the criteria tree.
struct PreferenceModel {
  std::string version = "1";
  std::vector<MetricDef> metrics;
  std::vector<PiecewiseLinearUtility> utilities;
  std::vector<OwaConfig> owa_configs;
  CriteriaNode tree;

  const MetricDef* find_metric(const std::string& id) const;
  const PiecewiseLinearUtility* find_utility(const std::string& id) const;
  const OwaConfig* find_owa(const std::string& id) const;
};

// Metric ids used by the bundled model and by measurement collection.
std::string completeness_metric_id(TargetClass c);  // "tc-<class>"
inline constexpr const char* kTimeFrameMetricId = "time-frame";
inline constexpr const char* kTrackOccupancyMetricId = "track-occupancy";

// Alternative ids for the two bundled solutions.
inline constexpr const char* kAltNaNsr = "na-nsr";
inline constexpr const char* kAltAStu = "a-stu";

/// The bundled 8-leaf evaluation model: root "RRM performance" over
/// Surveillance (time frame), Tracking (air targets: ballistic missiles,
/// commercial aircraft, recreational aircraft, birds; surface targets:
/// ships, recreational boats) and Load Balancing (track occupancy).
/// Capacities are uniform placeholders, utilities and OWA configurations are
/// documented defaults; real preference data comes from a model file.
PreferenceModel default_paper_model();

/// Structural and data validation: dangling references, capacity dimension
/// and constraint violations, utility shape violations, out-of-range samples
/// and alternatives missing samples for some leaf. An empty report means the
/// pair is evaluable end-to-end.
ValidationReport validate_model(const PreferenceModel& model,
                                const MeasurementSet& measurements);

/// Model-only validation (no measurements).
ValidationReport validate_model(const PreferenceModel& model);

}  // namespace rrmeval
