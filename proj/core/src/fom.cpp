// Copyright 2026 The rrmeval Authors
// SPDX-License-Identifier: Apache-2.0

#include "rrmeval/fom.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rrmeval {

std::string_view to_string(BeamKind k) {
  return k == BeamKind::Surveillance ? "surveillance" : "track-update";
}

double RadarTimeline::busy_time() const {
  double t = 0.0;
  for (const auto& e : entries) t += e.duration;
  return t;
}

double RadarTimeline::surveillance_time() const {
  double t = 0.0;
  for (const auto& e : entries) {
    if (e.kind == BeamKind::Surveillance) t += e.duration;
  }
  return t;
}

double RadarTimeline::track_update_time() const {
  double t = 0.0;
  for (const auto& e : entries) {
    if (e.kind == BeamKind::TrackUpdate) t += e.duration;
  }
  return t;
}

double track_completeness(const TruthTrajectory& truth, const TrackRecord& track) {
  const double alive = truth.t1 - truth.t0;
  if (!(alive > 0.0)) {
    throw std::invalid_argument("track_completeness: zero-length trajectory " + truth.target_id);
  }
  double covered = 0.0;
  for (const auto& interval : track.tracked_intervals) {
    const double lo = std::max(interval.start, truth.t0);
    const double hi = std::min(interval.end, truth.t1);
    if (hi > lo) covered += hi - lo;
  }
  return std::clamp(covered / alive, 0.0, 1.0);
}

double time_frame(const RadarTimeline& timeline, int sectors, ValidationReport* report) {
  if (sectors <= 0) throw std::invalid_argument("time_frame: sector count must be positive");

  std::vector<std::vector<double>> visits(static_cast<std::size_t>(sectors));
  for (const auto& e : timeline.entries) {
    if (e.kind != BeamKind::Surveillance) continue;
    if (e.sector < 0 || e.sector >= sectors) continue;
    visits[static_cast<std::size_t>(e.sector)].push_back(e.t);
  }

  double sum = 0.0;
  for (int s = 0; s < sectors; ++s) {
    auto& times = visits[static_cast<std::size_t>(s)];
    std::sort(times.begin(), times.end());
    if (times.size() < 2) {
      // never revisited: the sector is effectively refreshed once per scenario
      sum += timeline.duration;
      if (report != nullptr) {
        report->add_warning("sector " + std::to_string(s),
                            times.empty() ? "never visited" : "never revisited");
      }
      continue;
    }
    double intervals = 0.0;
    for (std::size_t k = 1; k < times.size(); ++k) intervals += times[k] - times[k - 1];
    sum += intervals / static_cast<double>(times.size() - 1);
  }
  return sum / static_cast<double>(sectors);
}

double track_occupancy(const RadarTimeline& timeline) {
  if (!(timeline.duration > 0.0)) {
    throw std::invalid_argument("track_occupancy: timeline duration must be positive");
  }
  return timeline.track_update_time() / timeline.duration;
}

std::map<TargetClass, int> untracked_count(std::span<const TruthTrajectory> truths,
                                           std::span<const TrackRecord> tracks,
                                           double threshold) {
  if (!(threshold >= 0.0) || threshold >= 1.0) {
    throw std::invalid_argument("untracked_count: threshold must be in [0,1)");
  }
  std::map<TargetClass, int> counts;
  for (TargetClass c : kAllTargetClasses) counts[c] = 0;

  for (const auto& truth : truths) {
    const TrackRecord* record = nullptr;
    for (const auto& t : tracks) {
      if (t.target_id == truth.target_id) {
        record = &t;
        break;
      }
    }
    const double completeness =
        record == nullptr ? 0.0 : track_completeness(truth, *record);
    if (completeness <= threshold) ++counts[truth.cls];
  }
  return counts;
}

MeasurementSet collect_measurements(
    const std::map<std::string, std::vector<ScenarioRun>>& runs_by_alternative) {
  MeasurementSet set;
  for (const auto& [alternative, runs] : runs_by_alternative) {
    if (runs.empty()) {
      throw std::invalid_argument("collect_measurements: alternative '" + alternative +
                                  "' has no scenarios");
    }
    for (const auto& run : runs) {
      for (const auto& truth : run.truths) {
        const TrackRecord* record = nullptr;
        for (const auto& t : run.tracks) {
          if (t.target_id == truth.target_id) {
            record = &t;
            break;
          }
        }
        TrackRecord empty{truth.target_id, {}};
        const double tc = track_completeness(truth, record ? *record : empty);
        set.add(alternative, completeness_metric_id(truth.cls),
                {tc, run.scenario_id, truth.target_id});
      }
      set.add(alternative, kTimeFrameMetricId,
              {time_frame(run.timeline, run.sectors), run.scenario_id, ""});
      set.add(alternative, kTrackOccupancyMetricId,
              {track_occupancy(run.timeline), run.scenario_id, ""});
    }
  }
  return set;
}

}  // namespace rrmeval
