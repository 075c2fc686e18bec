// Copyright 2026 The rrmeval Authors
// SPDX-License-Identifier: Apache-2.0

#include "rrmeval/pipeline.hpp"

#include <fstream>
#include <map>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "rrmeval/fom.hpp"
#include "rrmeval/simulator.hpp"

namespace rrmeval {

namespace {

struct ConditionOutputs {
  std::map<std::string, std::vector<ScenarioRun>> runs;
  std::map<std::string, std::map<TargetClass, int>> untracked;
};

ConditionOutputs simulate_condition(const DemoOptions& options, bool clutter,
                                    const PreferenceModel& model,
                                    const std::filesystem::path& scenario_root) {
  ConditionOutputs out;
  const std::string condition = clutter ? "clutter" : "no-clutter";

  const std::vector<std::pair<std::string, int>> alternatives = {
      {kAltAStu, options.scenarios_a_stu},
      {kAltNaNsr, options.scenarios_na_nsr},
  };
  for (const auto& [alt, scenario_count] : alternatives) {
    const Policy policy = alt == kAltAStu ? Policy::a_stu() : Policy::na_nsr();
    std::map<TargetClass, int> untracked;
    for (TargetClass c : kAllTargetClasses) untracked[c] = 0;

    for (int i = 0; i < scenario_count; ++i) {
      ScenarioConfig cfg = ScenarioConfig::defaults();
      cfg.scenario_id = "s" + std::to_string(i);
      cfg.seed = options.base_seed + static_cast<std::uint64_t>(i);
      cfg.clutter = clutter;

      SimulationResult result = run_scenario(cfg, policy);
      const auto counts = untracked_count(result.run.truths, result.run.tracks,
                                          options.untracked_threshold);
      for (const auto& [cls, n] : counts) untracked[cls] += n;

      if (options.write_scenario_logs) {
        RunManifest manifest = RunManifest::make("demo/simulate");
        manifest.seeds = {cfg.seed};
        manifest.flags["policy"] = std::string(to_string(policy.kind));
        manifest.flags["clutter"] = clutter ? "true" : "false";
        manifest.input_hashes["model"] = model_hash(model);
        save_scenario_run(result, cfg, policy,
                          scenario_root / alt / condition / cfg.scenario_id, manifest);
      }
      out.runs[alt].push_back(std::move(result.run));
    }
    out.untracked[alt] = std::move(untracked);
  }
  return out;
}

}  // namespace

DemoSummary run_demo(const DemoOptions& options) {
  if (options.out_dir.empty()) throw std::invalid_argument("demo: output directory required");
  if (options.scenarios_a_stu < 1 || options.scenarios_na_nsr < 1) {
    throw std::invalid_argument("demo: each policy needs at least one scenario");
  }
  std::filesystem::create_directories(options.out_dir);

  const PreferenceModel model = default_paper_model();
  save_preference_model(model, options.out_dir / "model.json");

  EvaluationOptions eval_options;
  eval_options.mode = options.mode;
  eval_options.alpha = options.alpha;

  DemoSummary summary;
  const auto scenario_root = options.out_dir / "scenarios";

  for (bool clutter : {false, true}) {
    const std::string condition = clutter ? "clutter" : "no_clutter";
    ConditionOutputs outputs = simulate_condition(options, clutter, model, scenario_root);

    const auto measurements_path =
        options.out_dir / ("measurements_" + condition + ".csv");
    save_measurements(collect_measurements(outputs.runs), measurements_path);

    // evaluate the canonical on-disk values, so `evaluate` on the same CSV
    // reproduces these reports byte for byte
    auto loaded = load_measurements(measurements_path, &model);
    if (!loaded.ok()) {
      throw std::runtime_error("demo measurements failed to reload:\n" +
                               loaded.issues.to_string());
    }
    EvaluationResult eval = evaluate(model, *loaded.value, eval_options);
    const ReportFiles files =
        write_report(eval, model, options.out_dir / ("eval_" + condition));

    summary.untracked_counts[clutter ? "clutter" : "no-clutter"] =
        std::move(outputs.untracked);
    if (clutter) {
      summary.report_clutter = files.json;
      summary.eval_clutter = std::move(eval);
    } else {
      summary.report_no_clutter = files.json;
      summary.eval_no_clutter = std::move(eval);
    }
  }

  // untracked-target counts per condition and alternative
  {
    nlohmann::ordered_json j;
    j["format"] = "rrmeval-untracked";
    j["threshold"] = options.untracked_threshold;
    nlohmann::ordered_json conditions;
    for (const auto& [condition, by_alt] : summary.untracked_counts) {
      nlohmann::ordered_json alts;
      for (const auto& [alt, counts] : by_alt) {
        nlohmann::ordered_json by_class;
        for (const auto& [cls, n] : counts) by_class[std::string(to_string(cls))] = n;
        alts[alt] = std::move(by_class);
      }
      conditions[condition] = std::move(alts);
    }
    j["conditions"] = std::move(conditions);
    summary.untracked = options.out_dir / "untracked.json";
    std::ofstream out(summary.untracked, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + summary.untracked.string());
    out << j.dump(2) << "\n";
  }

  // head-to-head comparison on the no-clutter condition
  {
    auto view = load_report(summary.report_no_clutter);
    if (!view.ok()) {
      throw std::runtime_error("demo report failed to reload:\n" + view.issues.to_string());
    }
    auto comparison = compare_reports(*view.value, kAltAStu, *view.value, kAltNaNsr);
    if (!comparison.ok()) {
      throw std::runtime_error("demo comparison failed:\n" + comparison.issues.to_string());
    }
    summary.comparison = options.out_dir / "compare_no_clutter.md";
    std::ofstream out(summary.comparison, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + summary.comparison.string());
    out << *comparison.value;
  }

  // top-level manifest for the whole demo output set
  {
    RunManifest manifest = RunManifest::make("demo");
    for (int i = 0; i < std::max(options.scenarios_a_stu, options.scenarios_na_nsr); ++i) {
      manifest.seeds.push_back(options.base_seed + static_cast<std::uint64_t>(i));
    }
    manifest.input_hashes["model"] = model_hash(model);
    if (options.mode) manifest.flags["gauge-mode"] = std::string(to_string(*options.mode));
    if (options.alpha) manifest.flags["alpha"] = std::to_string(*options.alpha);
    manifest.flags["scenarios-a-stu"] = std::to_string(options.scenarios_a_stu);
    manifest.flags["scenarios-na-nsr"] = std::to_string(options.scenarios_na_nsr);
    write_manifest(manifest, options.out_dir / "run_manifest.json");
  }

  return summary;
}

}  // namespace rrmeval
