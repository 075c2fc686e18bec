// Copyright 2026 The rrmeval Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rrmeval/fom.hpp"
#include "rrmeval/types.hpp"

namespace rrmeval {

/// Desk-scale scenario description. Clutter is modeled as a detection
/// probability penalty plus a false-alarm confirmation load, not as a
/// spatial clutter map.
struct ScenarioConfig {
  std::string scenario_id = "s0";
  double duration = 240.0;          // seconds
  std::uint64_t seed = 1;
  std::map<TargetClass, int> populations;
  bool clutter = false;
  double launch_region_scale = 1.0; // >= 0; spreads ballistic missile appearance
  int beam_budget = 32;             // beams per second
  int sectors = 16;                 // surveillance discretization of the space

  static ScenarioConfig defaults();
};

enum class PolicyKind { NaNsr, AStu };

std::string_view to_string(PolicyKind k);
std::optional<PolicyKind> policy_kind_from_string(std::string_view s);

/// Track-update policy. NA+NSR revisits every track at one fixed interval.
/// A+STU scales per-class base intervals by fuzzy priority (most threatening
/// targets get the shortest intervals) and schedules with priority-ordered
/// time balancing.
struct Policy {
  PolicyKind kind = PolicyKind::NaNsr;
  double fixed_interval = 1.5;                     // NA+NSR, seconds
  std::map<TargetClass, double> base_intervals;    // A+STU, seconds
  double i_min_factor = 0.25;                      // shortest interval as a fraction of base

  static Policy na_nsr();
  static Policy a_stu();
};

/// Kinematic and detectability state feeding fuzzy prioritization.
struct TargetState {
  TargetClass cls = TargetClass::Ship;
  double range = 0.5;          // relative distance in [0,1]
  double closing_speed = 0.0;  // relative in [-1,1], positive = approaching
  double detectability = 0.5;  // base detection probability per dwell
};

/// Mamdani-style fuzzy priority in [0,1] over class threat, range and
/// closing speed, defuzzified by centroid. Ballistic missiles always rank at
/// least as high as birds under equal kinematics.
double fuzzy_priority(const TargetState& s);

/// Update interval from priority: base * (f + (1-priority) * (1-f)) with
/// f = i_min_factor. Monotone nonincreasing in priority.
double adaptive_update_interval(double priority, double base_interval,
                                double i_min_factor = 0.25);

/// A pending track update as seen by the scheduler.
struct UpdateRequest {
  std::string target_id;
  double due = 0.0;
  double priority = 0.5;
};

/// One tick's beam assignments: updates granted in schedule order, updates
/// deferred for lack of budget, and the residual beams given to
/// surveillance. Ordering: priority desc, then due time asc, then target id.
struct TickPlan {
  std::vector<UpdateRequest> granted;
  std::vector<UpdateRequest> deferred;
  int surveillance_beams = 0;
};

/// Allocates `budget` beams for one tick. Never double-books a beam;
/// surveillance fills whatever the due updates do not take.
TickPlan schedule_tick(std::vector<UpdateRequest> due_updates, int budget);

struct SimulationResult {
  ScenarioRun run;
  std::uint64_t seed = 0;
  std::string rng_name;       // fixed generator, recorded for reproducibility
  int deferred_updates = 0;   // over-subscription events
  int false_alarms = 0;
  ValidationReport warnings;
};

/// Runs one scenario under one policy. Deterministic for fixed
/// (config, policy): per-target random streams are derived from the seed
/// with splitmix64. Every beam goes to surveillance or a track update;
/// tracks initiate after 2-of-3 surveillance detections and drop after 3
/// consecutive missed updates.
SimulationResult run_scenario(const ScenarioConfig& cfg, const Policy& policy);

}  // namespace rrmeval
