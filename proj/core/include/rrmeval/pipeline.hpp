// Copyright 2026 The rrmeval Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

#include "rrmeval/evaluate.hpp"
#include "rrmeval/io.hpp"

namespace rrmeval {

/// Desk-scale end-to-end run: both policies, clutter on and off, bundled
/// model. NA+NSR runs fewer scenarios than A+STU, mirroring the unequal
/// scenario counts the evaluation must accept.
struct DemoOptions {
  std::filesystem::path out_dir;
  std::uint64_t base_seed = 20190901;
  int scenarios_a_stu = 4;
  int scenarios_na_nsr = 3;
  std::optional<GaugeMode> mode;
  std::optional<double> alpha;
  double untracked_threshold = 0.0;
  bool write_scenario_logs = true;
};

struct DemoSummary {
  std::filesystem::path report_no_clutter;  // eval_no_clutter.json
  std::filesystem::path report_clutter;     // eval_clutter.json
  std::filesystem::path comparison;         // compare_no_clutter.md
  std::filesystem::path untracked;          // untracked.json

  EvaluationResult eval_no_clutter;
  EvaluationResult eval_clutter;
  // condition -> alternative -> class -> count
  std::map<std::string, std::map<std::string, std::map<TargetClass, int>>> untracked_counts;
};

DemoSummary run_demo(const DemoOptions& options);

}  // namespace rrmeval
