// Copyright 2026 The rrmeval Authors
// SPDX-License-Identifier: Apache-2.0

#include "rrmeval/evaluate.hpp"

#include <algorithm>
#include <stdexcept>

namespace rrmeval {

const NodeResult* EvaluationResult::find_node(const std::string& id) const {
  for (const auto& n : nodes) {
    if (n.id == id) return &n;
  }
  return nullptr;
}

double EvaluationResult::root_score(const std::string& alternative_id) const {
  const NodeResult* r = root();
  if (r == nullptr) throw std::logic_error("empty evaluation result");
  auto it = r->scores.find(alternative_id);
  if (it == r->scores.end()) {
    throw std::invalid_argument("no score for alternative '" + alternative_id + "'");
  }
  return it->second;
}

namespace {

std::string default_label(const std::string& id) {
  if (id == kAltAStu) return "A+STU";
  if (id == kAltNaNsr) return "NA+NSR";
  return id;
}

struct Evaluator {
  const PreferenceModel& model;
  const MeasurementSet& measurements;
  const EvaluationOptions& options;
  std::vector<std::string> alternatives;
  EvaluationResult result;

  // Normalizes raw samples through the leaf utility; counts values outside
  // the breakpoint span (they clamp to the end scores).
  std::vector<double> normalize(const std::vector<double>& raw,
                                const PiecewiseLinearUtility& utility) {
    std::vector<double> scores;
    scores.reserve(raw.size());
    const double span_lo = utility.breakpoints.front().first;
    const double span_hi = utility.breakpoints.back().first;
    for (double x : raw) {
      if (x < span_lo || x > span_hi) ++result.clamp_warnings;
      scores.push_back(std::clamp(evaluate_utility(utility, x), 0.0, 1.0));
    }
    return scores;
  }

  void evaluate_leaf(const CriteriaNode& node, NodeResult& out) {
    const MetricDef& metric = *model.find_metric(node.metric_id);
    const PiecewiseLinearUtility& utility = *model.find_utility(node.utility_id);
    OwaConfig cfg = *model.find_owa(node.owa_id);
    if (options.alpha) {
      cfg.alpha = *options.alpha;
      cfg.raw_weights.clear();
    }
    const GaugeMode mode = options.mode.value_or(cfg.mode);

    for (const auto& alt : alternatives) {
      const std::vector<double> raw = measurements.values(alt, node.metric_id);
      const std::vector<double> scores = normalize(raw, utility);
      const GaugeScore gauge = gauge_score(scores, cfg, mode, options.grid_size);

      out.scores[alt] = gauge.score;
      out.gauges[alt] = {gauge.score, gauge.mode, gauge.sample_count,
                         gauge.density.bandwidth, gauge.note};

      LeafCurves curves;
      curves.grid = gauge.density.grid;
      curves.criterion_density = gauge.density.values;
      curves.weight = gauge.weight_curve;
      std::vector<double> rescaled;
      rescaled.reserve(raw.size());
      const double width = metric.range_hi - metric.range_lo;
      for (double x : raw) {
        rescaled.push_back(std::clamp((x - metric.range_lo) / width, 0.0, 1.0));
      }
      curves.metric_density = kde(rescaled, options.grid_size).values;
      out.curves[alt] = std::move(curves);
    }
  }

  // returns the index of the node's result in result.nodes
  std::size_t walk(const CriteriaNode& node, int depth, const std::string& path) {
    const std::size_t index = result.nodes.size();
    NodeResult entry;
    entry.id = node.id;
    entry.label = node.label;
    entry.path = path;
    entry.depth = depth;
    entry.leaf = node.is_leaf();
    entry.metric_id = node.metric_id;
    result.nodes.push_back(std::move(entry));

    if (node.is_leaf()) {
      evaluate_leaf(node, result.nodes[index]);
      return index;
    }

    std::vector<std::size_t> child_indices;
    child_indices.reserve(node.children.size());
    for (const auto& child : node.children) {
      child_indices.push_back(walk(child, depth + 1, path + "/" + child.id));
    }
    for (const auto& alt : alternatives) {
      std::vector<double> child_scores;
      child_scores.reserve(child_indices.size());
      for (std::size_t ci : child_indices) {
        child_scores.push_back(result.nodes[ci].scores.at(alt));
      }
      result.nodes[index].scores[alt] = choquet_2add(node.capacity, child_scores);
    }
    return index;
  }
};

}  // namespace

EvaluationResult evaluate(const PreferenceModel& model, const MeasurementSet& measurements,
                          const EvaluationOptions& options) {
  if (options.alpha && !(*options.alpha >= 1.0)) {
    throw std::invalid_argument("alpha override must be >= 1");
  }
  const ValidationReport report = validate_model(model, measurements);
  if (!report.ok()) {
    throw std::invalid_argument("model/measurements failed validation:\n" + report.to_string());
  }

  Evaluator ev{model, measurements, options, measurements.alternative_ids(), {}};
  ev.result.mode_override = options.mode;
  ev.result.alpha_override = options.alpha;
  for (const auto& id : ev.alternatives) {
    ev.result.alternatives.push_back({id, default_label(id)});
  }
  ev.walk(model.tree, 0, model.tree.id);
  return ev.result;
}

}  // namespace rrmeval
