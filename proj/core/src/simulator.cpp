// Copyright 2026 The rrmeval Authors
// SPDX-License-Identifier: Apache-2.0

#include "rrmeval/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "rrmeval/rng.hpp"

namespace rrmeval {

ScenarioConfig ScenarioConfig::defaults() {
  ScenarioConfig cfg;
  cfg.populations = {
      {TargetClass::BallisticMissile, 3}, {TargetClass::CommercialAircraft, 6},
      {TargetClass::RecreationalAircraft, 6}, {TargetClass::Bird, 10},
      {TargetClass::Ship, 5}, {TargetClass::RecreationalBoat, 8},
  };
  return cfg;
}

std::string_view to_string(PolicyKind k) {
  return k == PolicyKind::NaNsr ? "na-nsr" : "a-stu";
}

std::optional<PolicyKind> policy_kind_from_string(std::string_view s) {
  if (s == "na-nsr") return PolicyKind::NaNsr;
  if (s == "a-stu") return PolicyKind::AStu;
  return std::nullopt;
}

Policy Policy::na_nsr() {
  Policy p;
  p.kind = PolicyKind::NaNsr;
  p.fixed_interval = 1.5;
  return p;
}

Policy Policy::a_stu() {
  Policy p;
  p.kind = PolicyKind::AStu;
  p.base_intervals = {
      {TargetClass::BallisticMissile, 4.0}, {TargetClass::CommercialAircraft, 5.0},
      {TargetClass::RecreationalAircraft, 5.0}, {TargetClass::Bird, 6.0},
      {TargetClass::Ship, 5.0}, {TargetClass::RecreationalBoat, 6.0},
  };
  return p;
}

// ---------------------------------------------------------------------------
// fuzzy prioritization

namespace {

double tri(double x, double a, double b, double c) {
  if (x <= a || x >= c) return 0.0;
  return x < b ? (x - a) / (b - a) : (c - x) / (c - b);
}

double left_shoulder(double x, double b, double c) {
  if (x <= b) return 1.0;
  if (x >= c) return 0.0;
  return (c - x) / (c - b);
}

double right_shoulder(double x, double a, double b) {
  if (x <= a) return 0.0;
  if (x >= b) return 1.0;
  return (x - a) / (b - a);
}

double class_threat(TargetClass c) {
  switch (c) {
    case TargetClass::BallisticMissile: return 0.95;
    case TargetClass::Ship: return 0.55;
    case TargetClass::CommercialAircraft: return 0.50;
    case TargetClass::RecreationalAircraft: return 0.40;
    case TargetClass::RecreationalBoat: return 0.30;
    case TargetClass::Bird: return 0.08;
  }
  return 0.5;
}

// output fuzzy sets over the priority axis
double out_low(double u) { return left_shoulder(u, 0.0, 0.35); }
double out_med(double u) { return tri(u, 0.2, 0.5, 0.8); }
double out_high(double u) { return right_shoulder(u, 0.65, 1.0); }

}  // namespace

double fuzzy_priority(const TargetState& s) {
  const double threat = class_threat(s.cls);
  const double threat_low = left_shoulder(threat, 0.15, 0.35);
  const double threat_med = tri(threat, 0.25, 0.5, 0.75);
  const double threat_high = right_shoulder(threat, 0.65, 0.9);

  const double near = left_shoulder(s.range, 0.2, 0.5);
  const double far = right_shoulder(s.range, 0.4, 0.8);
  const double approaching = right_shoulder(s.closing_speed, -0.2, 0.3);
  const double receding = left_shoulder(s.closing_speed, -0.3, 0.2);

  // Mamdani rule base: min conjunction, max aggregation. Low-threat classes
  // never activate the medium or high sets, which pins birds below
  // ballistic missiles regardless of kinematics.
  const double act_high = std::max(threat_high, std::min(threat_med, near));
  const double act_med = std::min({threat_med, far, approaching});
  const double act_low = std::max(threat_low, std::min({threat_med, far, receding}));

  constexpr int kSteps = 200;
  double num = 0.0;
  double den = 0.0;
  for (int i = 0; i <= kSteps; ++i) {
    const double u = static_cast<double>(i) / kSteps;
    const double mu = std::max({std::min(act_low, out_low(u)), std::min(act_med, out_med(u)),
                                std::min(act_high, out_high(u))});
    num += u * mu;
    den += mu;
  }
  if (den <= 0.0) return std::clamp(threat, 0.0, 1.0);
  return num / den;
}

double adaptive_update_interval(double priority, double base_interval, double i_min_factor) {
  priority = std::clamp(priority, 0.0, 1.0);
  return base_interval * (i_min_factor + (1.0 - priority) * (1.0 - i_min_factor));
}

// ---------------------------------------------------------------------------
// scheduling

TickPlan schedule_tick(std::vector<UpdateRequest> due_updates, int budget) {
  if (budget <= 0) throw std::invalid_argument("schedule_tick: budget must be positive");
  std::stable_sort(due_updates.begin(), due_updates.end(),
                   [](const UpdateRequest& a, const UpdateRequest& b) {
                     if (a.priority != b.priority) return a.priority > b.priority;
                     if (a.due != b.due) return a.due < b.due;
                     return a.target_id < b.target_id;
                   });
  TickPlan plan;
  const auto granted = std::min<std::size_t>(due_updates.size(),
                                             static_cast<std::size_t>(budget));
  plan.granted.assign(due_updates.begin(), due_updates.begin() + granted);
  plan.deferred.assign(due_updates.begin() + granted, due_updates.end());
  plan.surveillance_beams = budget - static_cast<int>(granted);
  return plan;
}

// ---------------------------------------------------------------------------
// scenario event loop

namespace {

struct ClassProfile {
  double detectability;
  double life_lo, life_hi;
  double closing_lo, closing_hi;
};

ClassProfile profile_of(TargetClass c) {
  switch (c) {
    case TargetClass::BallisticMissile: return {0.85, 40.0, 70.0, 0.7, 1.0};
    case TargetClass::CommercialAircraft: return {0.85, 120.0, 200.0, 0.2, 0.5};
    case TargetClass::RecreationalAircraft: return {0.60, 80.0, 160.0, -0.2, 0.4};
    case TargetClass::Bird: return {0.50, 60.0, 140.0, -0.3, 0.3};
    case TargetClass::Ship: return {0.80, 150.0, 220.0, -0.1, 0.2};
    case TargetClass::RecreationalBoat: return {0.55, 100.0, 180.0, -0.2, 0.2};
  }
  return {0.5, 60.0, 120.0, -0.2, 0.2};
}

const char* class_code(TargetClass c) {
  switch (c) {
    case TargetClass::BallisticMissile: return "bm";
    case TargetClass::CommercialAircraft: return "ca";
    case TargetClass::RecreationalAircraft: return "ra";
    case TargetClass::Bird: return "bd";
    case TargetClass::Ship: return "sh";
    case TargetClass::RecreationalBoat: return "rb";
  }
  return "xx";
}

constexpr double kClutterSmallFactor = 0.6;
constexpr double kClutterLargeFactor = 0.9;
constexpr double kFalseAlarmRate = 0.02;   // per ordinary surveillance dwell, clutter only
constexpr double kRangeRatePerSec = 0.002; // relative range closed per second at closing = 1

struct SimTarget {
  std::string id;
  TargetClass cls = TargetClass::Ship;
  double spawn = 0.0;
  double despawn = 0.0;
  int sector = 0;
  double range0 = 0.5;
  double closing = 0.0;
  double detectability = 0.5;
  SplitMix64 rng{0};

  bool tracked = false;
  std::deque<bool> looks;  // last surveillance look outcomes while untracked
  int missed = 0;
  double track_start = 0.0;
  double next_due = 0.0;
  double interval = 0.0;
  double priority = 0.5;
  std::vector<TimeInterval> intervals;

  bool alive(double t) const { return t >= spawn && t < despawn; }

  double range(double t) const {
    const double dt = std::max(0.0, t - spawn);
    return std::clamp(range0 - closing * kRangeRatePerSec * dt, 0.02, 1.0);
  }

  TargetState state(double t) const { return {cls, range(t), closing, detectability}; }
};

double clutter_factor(TargetClass c) {
  return is_small_target(c) ? kClutterSmallFactor : kClutterLargeFactor;
}

class ScenarioEngine {
 public:
  ScenarioEngine(const ScenarioConfig& cfg, const Policy& policy)
      : cfg_(cfg), policy_(policy), root_rng_(cfg.seed) {
    if (!(cfg.duration > 0.0)) throw std::invalid_argument("scenario duration must be positive");
    if (cfg.beam_budget <= 0) throw std::invalid_argument("beam budget must be positive");
    if (cfg.sectors <= 0) throw std::invalid_argument("sector count must be positive");
    if (cfg.launch_region_scale < 0.0) {
      throw std::invalid_argument("launch region scale must be >= 0");
    }
    for (const auto& [cls, count] : cfg.populations) {
      if (count < 0) throw std::invalid_argument("population counts must be >= 0");
    }
    spawn_targets();
  }

  SimulationResult run() {
    SimulationResult result;
    result.seed = cfg_.seed;
    result.rng_name = SplitMix64::name();
    result.run.scenario_id = cfg_.scenario_id;
    result.run.sectors = cfg_.sectors;
    result.run.timeline.duration = cfg_.duration;

    const double dwell = 1.0 / static_cast<double>(cfg_.beam_budget);
    const auto ticks = static_cast<int>(std::ceil(cfg_.duration));

    for (int tick = 0; tick < ticks; ++tick) {
      const double t0 = static_cast<double>(tick);
      const double t1 = std::min(t0 + 1.0, cfg_.duration);
      close_dead_tracks(t0);

      std::vector<UpdateRequest> due;
      for (const auto& g : targets_) {
        if (g.tracked && g.alive(t0) && g.next_due < t1) {
          due.push_back({g.id, g.next_due, g.priority});
        }
      }
      TickPlan plan = schedule_tick(std::move(due), cfg_.beam_budget);
      result.deferred_updates += static_cast<int>(plan.deferred.size());

      std::vector<bool> done(plan.granted.size(), false);
      for (int slot = 0; slot < cfg_.beam_budget; ++slot) {
        const double t = t0 + static_cast<double>(slot) * dwell;
        if (t >= cfg_.duration) break;

        // first granted update already due at this slot, in plan order
        SimTarget* update_target = nullptr;
        for (std::size_t k = 0; k < plan.granted.size(); ++k) {
          if (done[k] || plan.granted[k].due > t) continue;
          SimTarget* g = find_target(plan.granted[k].target_id);
          if (g == nullptr || !g->tracked || !g->alive(t)) {
            done[k] = true;  // dropped or died earlier in the tick
            continue;
          }
          update_target = g;
          done[k] = true;
          break;
        }
        if (update_target != nullptr) {
          execute_update(*update_target, t, result.run.timeline, dwell);
          continue;
        }

        int sector;
        bool confirmation = false;
        if (!confirmations_.empty()) {
          sector = confirmations_.front();
          confirmations_.pop_front();
          confirmation = true;
        } else {
          sector = next_sector_;
          next_sector_ = (next_sector_ + 1) % cfg_.sectors;
        }
        execute_surveillance(sector, confirmation, t, result.run.timeline, dwell, result);
      }
    }

    // close whatever is still open at the end of the scenario
    for (auto& g : targets_) {
      if (g.tracked) {
        g.intervals.push_back({g.track_start, std::min(g.despawn, cfg_.duration)});
        g.tracked = false;
      }
    }

    for (const auto& g : targets_) {
      result.run.truths.push_back({g.id, g.cls, g.spawn, g.despawn});
      if (!g.intervals.empty()) {
        result.run.tracks.push_back({g.id, g.intervals});
      }
    }
    return result;
  }

 private:
  void spawn_targets() {
    std::uint64_t stream = 0;
    for (TargetClass cls : kAllTargetClasses) {
      auto it = cfg_.populations.find(cls);
      const int count = it == cfg_.populations.end() ? 0 : it->second;
      const ClassProfile prof = profile_of(cls);
      for (int k = 0; k < count; ++k) {
        SimTarget g;
        g.rng = root_rng_.stream(stream++);
        g.id = std::string(class_code(cls)) + "-" + (k < 10 ? "0" : "") + std::to_string(k);
        g.cls = cls;
        g.detectability = prof.detectability;
        g.spawn = g.rng.next_range(0.0, 0.5 * cfg_.duration);
        g.despawn = std::min(cfg_.duration, g.spawn + g.rng.next_range(prof.life_lo, prof.life_hi));
        g.sector = static_cast<int>(g.rng.next_below(static_cast<std::uint64_t>(cfg_.sectors)));
        g.closing = g.rng.next_range(prof.closing_lo, prof.closing_hi);
        if (cls == TargetClass::BallisticMissile) {
          // wider launch regions spread the appearance range
          const double spread = 0.15 + 0.175 * std::min(cfg_.launch_region_scale, 2.0);
          g.range0 = 0.25 + g.rng.next_range(0.0, spread);
        } else {
          g.range0 = g.rng.next_range(0.25, 0.85);
        }
        targets_.push_back(std::move(g));
      }
    }
    fa_rng_ = root_rng_.stream(0x100000);
  }

  SimTarget* find_target(const std::string& id) {
    for (auto& g : targets_) {
      if (g.id == id) return &g;
    }
    return nullptr;
  }

  void close_dead_tracks(double t) {
    for (auto& g : targets_) {
      if (g.tracked && g.despawn <= t) {
        g.intervals.push_back({g.track_start, g.despawn});
        g.tracked = false;
        g.missed = 0;
        g.looks.clear();
      }
    }
  }

  double detection_probability(const SimTarget& g) const {
    double p = g.detectability;
    if (g.cls == TargetClass::BallisticMissile) {
      p /= 1.0 + 0.25 * cfg_.launch_region_scale;
    }
    if (cfg_.clutter) p *= clutter_factor(g.cls);
    return p;
  }

  double update_success_probability(const SimTarget& g) const {
    double p = std::min(0.97, g.detectability + 0.3);
    if (cfg_.clutter) p *= clutter_factor(g.cls);
    return p;
  }

  void start_track(SimTarget& g, double t) {
    g.tracked = true;
    g.track_start = t;
    g.missed = 0;
    g.looks.clear();
    refresh_track_rate(g, t);
    g.next_due = t + g.interval;
  }

  void refresh_track_rate(SimTarget& g, double t) {
    if (policy_.kind == PolicyKind::NaNsr) {
      g.priority = 0.5;  // no special rates: every track is equal
      g.interval = policy_.fixed_interval;
      return;
    }
    g.priority = fuzzy_priority(g.state(t));
    auto it = policy_.base_intervals.find(g.cls);
    const double base = it == policy_.base_intervals.end() ? 5.0 : it->second;
    g.interval = adaptive_update_interval(g.priority, base, policy_.i_min_factor);
  }

  void execute_update(SimTarget& g, double t, RadarTimeline& timeline, double dwell) {
    timeline.entries.push_back({t, std::min(dwell, cfg_.duration - t), BeamKind::TrackUpdate,
                                -1, g.id});
    if (g.rng.next_bernoulli(update_success_probability(g))) {
      g.missed = 0;
      refresh_track_rate(g, t);  // adaptive rates follow the evolving state
    } else if (++g.missed >= 3) {
      g.intervals.push_back({g.track_start, t});
      g.tracked = false;
      g.missed = 0;
      return;
    }
    g.next_due = t + g.interval;
  }

  void execute_surveillance(int sector, bool confirmation, double t, RadarTimeline& timeline,
                            double dwell, SimulationResult& result) {
    timeline.entries.push_back({t, std::min(dwell, cfg_.duration - t), BeamKind::Surveillance,
                                sector, ""});
    for (auto& g : targets_) {
      if (g.tracked || g.sector != sector || !g.alive(t)) continue;
      const bool detected = g.rng.next_bernoulli(detection_probability(g));
      g.looks.push_back(detected);
      if (g.looks.size() > 3) g.looks.pop_front();
      const int hits = static_cast<int>(std::count(g.looks.begin(), g.looks.end(), true));
      if (hits >= 2) start_track(g, t);
    }
    if (cfg_.clutter && !confirmation && fa_rng_.next_bernoulli(kFalseAlarmRate)) {
      confirmations_.push_back(sector);
      ++result.false_alarms;
    }
  }

  ScenarioConfig cfg_;
  Policy policy_;
  SplitMix64 root_rng_;
  SplitMix64 fa_rng_{0};
  std::vector<SimTarget> targets_;
  std::deque<int> confirmations_;
  int next_sector_ = 0;
};

}  // namespace

SimulationResult run_scenario(const ScenarioConfig& cfg, const Policy& policy) {
  ScenarioEngine engine(cfg, policy);
  return engine.run();
}

}  // namespace rrmeval
