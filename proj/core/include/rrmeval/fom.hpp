// Copyright 2026 The rrmeval Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "rrmeval/model.hpp"
#include "rrmeval/types.hpp"
#include "rrmeval/validation.hpp"

namespace rrmeval {

/// Ground-truth target lifetime.
struct TruthTrajectory {
  std::string target_id;
  TargetClass cls = TargetClass::Ship;
  double t0 = 0.0;
  double t1 = 0.0;  // alive over [t0, t1], t0 < t1
};

struct TimeInterval {
  double start = 0.0;
  double end = 0.0;

  double length() const { return end - start; }
};

/// Radar track intervals on one truth target (association is perfect,
/// provided by the simulator). Intervals are disjoint and sorted.
struct TrackRecord {
  std::string target_id;
  std::vector<TimeInterval> tracked_intervals;
};

enum class BeamKind { Surveillance, TrackUpdate };

std::string_view to_string(BeamKind k);

struct TimelineEntry {
  double t = 0.0;
  double duration = 0.0;
  BeamKind kind = BeamKind::Surveillance;
  int sector = -1;         // surveillance beams
  std::string target_id;   // track-update beams
};

/// Non-overlapping beam allocations over one scenario.
struct RadarTimeline {
  double duration = 0.0;
  std::vector<TimelineEntry> entries;

  double busy_time() const;
  double surveillance_time() const;
  double track_update_time() const;
};

/// Fraction of the target's lifetime covered by track intervals. Intervals
/// are clipped to the alive window. Throws std::invalid_argument on a
/// zero-length trajectory.
double track_completeness(const TruthTrajectory& truth, const TrackRecord& track);

/// Mean over sectors of the mean interval between surveillance visits.
/// A sector with fewer than two visits contributes the scenario duration and
/// is reported as a warning.
double time_frame(const RadarTimeline& timeline, int sectors,
                  ValidationReport* report = nullptr);

/// Fraction of radar time spent on track updates.
double track_occupancy(const RadarTimeline& timeline);

/// Per-class count of targets whose track completeness is <= threshold.
/// The default threshold 0 counts targets that were never tracked. All six
/// classes are present in the result. Throws for threshold outside [0,1).
std::map<TargetClass, int> untracked_count(std::span<const TruthTrajectory> truths,
                                           std::span<const TrackRecord> tracks,
                                           double threshold = 0.0);

/// One simulated scenario's outputs for one alternative.
struct ScenarioRun {
  std::string scenario_id;
  int sectors = 16;
  std::vector<TruthTrajectory> truths;
  std::vector<TrackRecord> tracks;
  RadarTimeline timeline;
};

/// Builds the measurement set the evaluation consumes: one completeness
/// sample per (target, scenario) routed to the class leaf, one time-frame
/// and one occupancy sample per scenario. Scenario counts may differ across
/// alternatives. Throws std::invalid_argument for an alternative with zero
/// scenarios.
MeasurementSet collect_measurements(
    const std::map<std::string, std::vector<ScenarioRun>>& runs_by_alternative);

}  // namespace rrmeval
