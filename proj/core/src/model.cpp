// Copyright 2026 The rrmeval Authors
// SPDX-License-Identifier: Apache-2.0

#include "rrmeval/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rrmeval {

void MeasurementSet::add(const std::string& alternative_id, const std::string& metric_id,
                         Sample s) {
  entries_[{alternative_id, metric_id}].push_back(std::move(s));
}

const std::vector<Sample>* MeasurementSet::find(const std::string& alternative_id,
                                                const std::string& metric_id) const {
  auto it = entries_.find({alternative_id, metric_id});
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<double> MeasurementSet::values(const std::string& alternative_id,
                                           const std::string& metric_id) const {
  std::vector<double> out;
  if (const auto* samples = find(alternative_id, metric_id)) {
    out.reserve(samples->size());
    for (const auto& s : *samples) out.push_back(s.value);
  }
  return out;
}

std::vector<std::string> MeasurementSet::alternative_ids() const {
  std::set<std::string> ids;
  for (const auto& [key, samples] : entries_) ids.insert(key.first);
  return {ids.begin(), ids.end()};
}

std::size_t MeasurementSet::total_samples() const {
  std::size_t n = 0;
  for (const auto& [key, samples] : entries_) n += samples.size();
  return n;
}

CriteriaNode CriteriaNode::leaf(std::string id, std::string label, std::string metric_id,
                                std::string utility_id, std::string owa_id) {
  CriteriaNode node;
  node.id = std::move(id);
  node.label = std::move(label);
  node.metric_id = std::move(metric_id);
  node.utility_id = std::move(utility_id);
  node.owa_id = std::move(owa_id);
  return node;
}

CriteriaNode CriteriaNode::aggregate(std::string id, std::string label,
                                     std::vector<CriteriaNode> children,
                                     MobiusCapacity2Add capacity) {
  CriteriaNode node;
  node.id = std::move(id);
  node.label = std::move(label);
  node.children = std::move(children);
  node.capacity = std::move(capacity);
  return node;
}

CriteriaNode CriteriaNode::aggregate(std::string id, std::string label,
                                     std::vector<CriteriaNode> children) {
  auto capacity = MobiusCapacity2Add::uniform(children.size());
  return aggregate(std::move(id), std::move(label), std::move(children), std::move(capacity));
}

namespace {

void visit_impl(const CriteriaNode& node, int depth, const std::string& path,
                const std::function<void(const CriteriaNode&, int, const std::string&)>& fn) {
  fn(node, depth, path);
  for (const auto& child : node.children) {
    visit_impl(child, depth + 1, path + "/" + child.id, fn);
  }
}

}  // namespace

void visit_tree(const CriteriaNode& root,
                const std::function<void(const CriteriaNode&, int, const std::string&)>& fn) {
  visit_impl(root, 0, root.id, fn);
}

std::size_t leaf_count(const CriteriaNode& root) {
  std::size_t n = 0;
  visit_tree(root, [&n](const CriteriaNode& node, int, const std::string&) {
    if (node.is_leaf()) ++n;
  });
  return n;
}

const MetricDef* PreferenceModel::find_metric(const std::string& id) const {
  for (const auto& m : metrics) {
    if (m.id == id) return &m;
  }
  return nullptr;
}

const PiecewiseLinearUtility* PreferenceModel::find_utility(const std::string& id) const {
  for (const auto& u : utilities) {
    if (u.id == id) return &u;
  }
  return nullptr;
}

const OwaConfig* PreferenceModel::find_owa(const std::string& id) const {
  for (const auto& o : owa_configs) {
    if (o.id == id) return &o;
  }
  return nullptr;
}

std::string completeness_metric_id(TargetClass c) {
  return "tc-" + std::string(to_string(c));
}

namespace {

std::string class_title(TargetClass c) {
  switch (c) {
    case TargetClass::BallisticMissile: return "Ballistic Missiles";
    case TargetClass::CommercialAircraft: return "Commercial Aircrafts";
    case TargetClass::RecreationalAircraft: return "Recreational Aircrafts";
    case TargetClass::Bird: return "Birds";
    case TargetClass::Ship: return "Ships";
    case TargetClass::RecreationalBoat: return "Recreational Boats";
  }
  return "";
}

}  // namespace

PreferenceModel default_paper_model() {
  PreferenceModel model;
  model.version = "1";

  for (TargetClass c : kAllTargetClasses) {
    model.metrics.push_back({completeness_metric_id(c),
                             "Track Completeness, " + class_title(c),
                             Direction::HigherBetter, 0.0, 1.0, "fraction"});
  }
  model.metrics.push_back({kTimeFrameMetricId, "Time Frame", Direction::LowerBetter, 0.0,
                           600.0, "s"});
  model.metrics.push_back({kTrackOccupancyMetricId, "Track Occupancy",
                           Direction::LowerBetter, 0.0, 1.0, "fraction"});

  // Documented defaults, not elicited preference data: identity for track
  // completeness, a steep threshold above 90% for ballistic missiles, and
  // decreasing utilities for the two lower-is-better metrics.
  model.utilities.push_back(PiecewiseLinearUtility::identity());
  model.utilities.push_back({"tc-strict-90", {{0.0, 0.0}, {0.9, 0.3}, {1.0, 1.0}}});
  model.utilities.push_back(
      {"time-frame-default",
       {{0.0, 1.0}, {1.0, 0.9}, {4.0, 0.55}, {12.0, 0.2}, {60.0, 0.05}, {600.0, 0.0}}});
  model.utilities.push_back({"occupancy-default", {{0.0, 1.0}, {1.0, 0.0}}});

  model.owa_configs.push_back({"pessimistic", 2.0, {}, GaugeMode::DiscreteOwa});

  auto tc_leaf = [](TargetClass c, const std::string& utility_id) {
    return CriteriaNode::leaf("tc-" + std::string(to_string(c)),
                              "TC for " + class_title(c), completeness_metric_id(c),
                              utility_id, "pessimistic");
  };

  std::vector<CriteriaNode> air;
  air.push_back(tc_leaf(TargetClass::BallisticMissile, "tc-strict-90"));
  air.push_back(tc_leaf(TargetClass::CommercialAircraft, "identity"));
  air.push_back(tc_leaf(TargetClass::RecreationalAircraft, "identity"));
  air.push_back(tc_leaf(TargetClass::Bird, "identity"));

  std::vector<CriteriaNode> surface;
  surface.push_back(tc_leaf(TargetClass::Ship, "identity"));
  surface.push_back(tc_leaf(TargetClass::RecreationalBoat, "identity"));

  std::vector<CriteriaNode> tracking_children;
  tracking_children.push_back(
      CriteriaNode::aggregate("air-targets", "Air Targets", std::move(air)));
  tracking_children.push_back(
      CriteriaNode::aggregate("surface-targets", "Surface Targets", std::move(surface)));

  std::vector<CriteriaNode> root_children;
  root_children.push_back(CriteriaNode::aggregate(
      "surveillance", "Surveillance",
      {CriteriaNode::leaf("time-frame", "Time Frame", kTimeFrameMetricId,
                          "time-frame-default", "pessimistic")}));
  root_children.push_back(CriteriaNode::aggregate("tracking", "Tracking",
                                                  std::move(tracking_children)));
  root_children.push_back(CriteriaNode::aggregate(
      "load-balancing", "Load Balancing",
      {CriteriaNode::leaf("track-occupancy", "Track Occupancy", kTrackOccupancyMetricId,
                          "occupancy-default", "pessimistic")}));

  model.tree = CriteriaNode::aggregate("rrm-performance", "RRM performance",
                                       std::move(root_children));
  return model;
}

namespace {

void validate_owa_config(const OwaConfig& cfg, ValidationReport& report) {
  const std::string where = "owa " + cfg.id;
  if (cfg.has_raw_weights()) {
    report.merge([&] {
      auto r = validate_owa_weights(OwaWeights{cfg.raw_weights});
      for (auto& issue : r.issues) issue.where = where;
      return r;
    }());
  } else if (!(cfg.alpha >= 1.0)) {
    std::ostringstream msg;
    msg << "alpha " << cfg.alpha << " must be >= 1";
    report.add_error(where, msg.str());
  }
}

}  // namespace

ValidationReport validate_model(const PreferenceModel& model) {
  ValidationReport report;

  std::set<std::string> metric_ids;
  for (const auto& m : model.metrics) {
    if (!metric_ids.insert(m.id).second) {
      report.add_error("metric " + m.id, "duplicate metric id");
    }
    if (!(m.range_lo < m.range_hi)) {
      report.add_error("metric " + m.id, "natural range lower bound must be below upper");
    }
  }
  std::set<std::string> utility_ids;
  for (const auto& u : model.utilities) {
    if (!utility_ids.insert(u.id).second) {
      report.add_error("utility " + u.id, "duplicate utility id");
    }
  }
  std::set<std::string> owa_ids;
  for (const auto& o : model.owa_configs) {
    if (!owa_ids.insert(o.id).second) {
      report.add_error("owa " + o.id, "duplicate OWA config id");
    }
    validate_owa_config(o, report);
  }

  std::set<std::string> node_ids;
  visit_tree(model.tree, [&](const CriteriaNode& node, int, const std::string& path) {
    if (!node_ids.insert(node.id).second) {
      report.add_error(path, "duplicate node id '" + node.id + "'");
    }
    if (node.is_leaf()) {
      const MetricDef* metric = model.find_metric(node.metric_id);
      if (metric == nullptr) {
        report.add_error(path, "leaf references unknown metric '" + node.metric_id + "'");
      }
      const PiecewiseLinearUtility* utility = model.find_utility(node.utility_id);
      if (utility == nullptr) {
        report.add_error(path, "leaf references unknown utility '" + node.utility_id + "'");
      } else if (metric != nullptr) {
        auto r = validate_utility(*utility, metric->direction);
        for (auto& issue : r.issues) issue.where = path + ": " + issue.where;
        report.merge(r);
      }
      if (model.find_owa(node.owa_id) == nullptr) {
        report.add_error(path, "leaf references unknown OWA config '" + node.owa_id + "'");
      }
    } else {
      if (node.capacity.size() != node.children.size()) {
        std::ostringstream msg;
        msg << "capacity covers " << node.capacity.size() << " criteria but node has "
            << node.children.size() << " children";
        report.add_error(path, msg.str());
      } else {
        auto r = validate_capacity(node.capacity);
        for (auto& issue : r.issues) issue.where = path + ": " + issue.where;
        report.merge(r);
      }
    }
  });

  return report;
}

ValidationReport validate_model(const PreferenceModel& model, const MeasurementSet& measurements) {
  ValidationReport report = validate_model(model);

  // sample ranges and metric references
  for (const auto& [key, samples] : measurements.entries()) {
    const auto& [alt_id, metric_id] = key;
    const MetricDef* metric = model.find_metric(metric_id);
    if (metric == nullptr) {
      report.add_error("measurements " + alt_id + "/" + metric_id,
                       "samples reference unknown metric '" + metric_id + "'");
      continue;
    }
    for (std::size_t k = 0; k < samples.size(); ++k) {
      if (!metric->in_range(samples[k].value)) {
        std::ostringstream msg;
        msg << "sample " << (k + 1) << " value " << samples[k].value
            << " outside natural range [" << metric->range_lo << ", " << metric->range_hi
            << "]";
        report.add_error("measurements " + alt_id + "/" + metric_id, msg.str());
      }
    }
  }

  // every alternative present must cover every leaf metric
  const auto alternatives = measurements.alternative_ids();
  visit_tree(model.tree, [&](const CriteriaNode& node, int, const std::string& path) {
    if (!node.is_leaf()) return;
    for (const auto& alt : alternatives) {
      const auto* samples = measurements.find(alt, node.metric_id);
      if (samples == nullptr || samples->empty()) {
        report.add_error(path, "alternative '" + alt + "' has no samples for metric '" +
                                   node.metric_id + "'");
      }
    }
  });

  return report;
}

}  // namespace rrmeval
