// Copyright 2026 The rrmeval Authors
// SPDX-License-Identifier: Apache-2.0
//
// rrmeval — simulate radar resource management scenarios, extract figures of
// merit, evaluate alternatives on a criteria hierarchy and compare reports.
//
// Exit codes: 0 success, 2 usage/parse error, 3 validation error, 4 runtime
// error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rrmeval/evaluate.hpp"
#include "rrmeval/fom.hpp"
#include "rrmeval/io.hpp"
#include "rrmeval/model.hpp"
#include "rrmeval/pipeline.hpp"
#include "rrmeval/simulator.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitRuntime = 4;

namespace fs = std::filesystem;
using namespace rrmeval;

fs::path default_out_dir() {
  if (const char* env = std::getenv("RRMEVAL_OUT_DIR"); env != nullptr && *env != '\0') {
    return fs::path(env);
  }
  return fs::path(".");
}

int fail_validation(const ValidationReport& report) {
  std::cerr << report.to_string();
  return kExitValidation;
}

struct SimulateArgs {
  std::string config_path;
  std::string policy = "a-stu";
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> scenario_id;
  bool clutter = false;
  bool no_clutter = false;
};

int run_simulate(const SimulateArgs& args) {
  auto loaded = load_scenario_config(args.config_path);
  if (!loaded.ok()) return fail_validation(loaded.issues);
  ScenarioFile file = *loaded.value;

  if (args.seed) file.config.seed = *args.seed;
  if (args.scenario_id) file.config.scenario_id = *args.scenario_id;
  if (args.clutter) file.config.clutter = true;
  if (args.no_clutter) file.config.clutter = false;

  const auto kind = policy_kind_from_string(args.policy);
  if (!kind) {
    std::cerr << "unknown policy '" << args.policy << "' (use na-nsr or a-stu)\n";
    return kExitUsage;
  }
  const Policy& policy = *kind == PolicyKind::AStu ? file.a_stu : file.na_nsr;

  const SimulationResult result = run_scenario(file.config, policy);

  RunManifest manifest = RunManifest::make("simulate");
  manifest.seeds = {file.config.seed};
  manifest.input_hashes[args.config_path] = hash_file(args.config_path);
  manifest.flags["policy"] = args.policy;
  manifest.flags["clutter"] = file.config.clutter ? "true" : "false";
  manifest.flags["scenario-id"] = file.config.scenario_id;

  const fs::path dir = args.out_dir.empty() ? default_out_dir() : fs::path(args.out_dir);
  save_scenario_run(result, file.config, policy, dir, manifest);

  std::cout << "scenario " << file.config.scenario_id << " (" << args.policy
            << (file.config.clutter ? ", clutter" : ", no clutter") << ") -> " << dir.string()
            << "\n"
            << "  targets " << result.run.truths.size() << ", tracked "
            << result.run.tracks.size() << ", beams " << result.run.timeline.entries.size()
            << ", deferred updates " << result.deferred_updates << ", false alarms "
            << result.false_alarms << "\n";
  return kExitOk;
}

struct CollectArgs {
  std::vector<std::string> run_specs;  // alternative=run_dir
  std::string out_path = "measurements.csv";
};

int run_collect(const CollectArgs& args) {
  std::map<std::string, std::vector<ScenarioRun>> runs;
  for (const auto& spec : args.run_specs) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 >= spec.size()) {
      std::cerr << "run spec '" << spec << "' must look like alternative=run_dir\n";
      return kExitUsage;
    }
    const std::string alt = spec.substr(0, eq);
    const fs::path dir = spec.substr(eq + 1);
    auto loaded = load_scenario_run(dir);
    if (!loaded.ok()) return fail_validation(loaded.issues);
    runs[alt].push_back(std::move(*loaded.value));
  }

  const MeasurementSet set = collect_measurements(runs);
  save_measurements(set, args.out_path);

  RunManifest manifest = RunManifest::make("collect");
  for (const auto& spec : args.run_specs) {
    const fs::path dir = spec.substr(spec.find('=') + 1);
    manifest.input_hashes[dir.string()] = hash_file(dir / "run_manifest.json");
  }
  write_manifest(manifest, fs::path(args.out_path).string() + ".manifest.json");

  std::cout << "collected " << set.total_samples() << " samples from " << args.run_specs.size()
            << " runs -> " << args.out_path << "\n";
  return kExitOk;
}

struct EvaluateArgs {
  std::string measurements_path;
  std::string model_path;  // empty: bundled default model
  std::string out_dir;
  std::string stem = "eval";
  std::string gauge_mode;
  std::optional<double> alpha;
};

int run_evaluate(const EvaluateArgs& args) {
  PreferenceModel model;
  if (args.model_path.empty()) {
    model = default_paper_model();
  } else {
    auto loaded = load_preference_model(args.model_path);
    if (!loaded.ok()) return fail_validation(loaded.issues);
    model = std::move(*loaded.value);
  }

  auto measurements = load_measurements(args.measurements_path, &model);
  if (!measurements.ok()) return fail_validation(measurements.issues);

  EvaluationOptions options;
  if (!args.gauge_mode.empty()) {
    const auto mode = gauge_mode_from_string(args.gauge_mode);
    if (!mode) {
      std::cerr << "unknown gauge mode '" << args.gauge_mode << "'\n";
      return kExitUsage;
    }
    options.mode = mode;
  }
  options.alpha = args.alpha;

  const ValidationReport report = validate_model(model, *measurements.value);
  if (!report.ok()) return fail_validation(report);

  const EvaluationResult result = evaluate(model, *measurements.value, options);

  const fs::path dir = args.out_dir.empty() ? default_out_dir() : fs::path(args.out_dir);
  const ReportFiles files = write_report(result, model, dir / args.stem);

  RunManifest manifest = RunManifest::make("evaluate");
  manifest.input_hashes[args.measurements_path] = hash_file(args.measurements_path);
  manifest.input_hashes["model"] = model_hash(model);
  if (options.mode) manifest.flags["gauge-mode"] = std::string(to_string(*options.mode));
  if (options.alpha) manifest.flags["alpha"] = std::to_string(*options.alpha);
  write_manifest(manifest, dir / (args.stem + "_manifest.json"));

  for (const auto& alt : result.alternatives) {
    std::cout << alt.label << " root score: " << result.root_score(alt.id) << "\n";
  }
  std::cout << "report: " << files.json.string() << "\n";
  return kExitOk;
}

struct CompareArgs {
  std::string left_path;
  std::string right_path;
  std::string left_alt;
  std::string right_alt;
  std::string out_path;
};

int run_compare(const CompareArgs& args) {
  auto left = load_report(args.left_path);
  if (!left.ok()) return fail_validation(left.issues);
  auto right = load_report(args.right_path);
  if (!right.ok()) return fail_validation(right.issues);

  const std::string left_alt =
      args.left_alt.empty() ? left.value->alternative_ids.front() : args.left_alt;
  const std::string right_alt =
      args.right_alt.empty() ? right.value->alternative_ids.front() : args.right_alt;

  auto comparison = compare_reports(*left.value, left_alt, *right.value, right_alt);
  if (!comparison.ok()) return fail_validation(comparison.issues);

  if (args.out_path.empty()) {
    std::cout << *comparison.value;
  } else {
    std::ofstream out(args.out_path, std::ios::binary | std::ios::trunc);
    if (!out) {
      std::cerr << "cannot write " << args.out_path << "\n";
      return kExitRuntime;
    }
    out << *comparison.value;
    std::cout << "comparison: " << args.out_path << "\n";
  }
  return kExitOk;
}

struct DemoArgs {
  std::string out_dir;
  std::uint64_t seed = 20190901;
  std::string gauge_mode;
  std::optional<double> alpha;
  int scenarios_a_stu = 4;
  int scenarios_na_nsr = 3;
  double untracked_threshold = 0.0;
  bool no_logs = false;
};

int run_demo_cmd(const DemoArgs& args) {
  DemoOptions options;
  options.out_dir = args.out_dir.empty() ? default_out_dir() / "demo" : fs::path(args.out_dir);
  options.base_seed = args.seed;
  options.scenarios_a_stu = args.scenarios_a_stu;
  options.scenarios_na_nsr = args.scenarios_na_nsr;
  options.untracked_threshold = args.untracked_threshold;
  options.write_scenario_logs = !args.no_logs;
  if (!args.gauge_mode.empty()) {
    const auto mode = gauge_mode_from_string(args.gauge_mode);
    if (!mode) {
      std::cerr << "unknown gauge mode '" << args.gauge_mode << "'\n";
      return kExitUsage;
    }
    options.mode = mode;
  }
  options.alpha = args.alpha;

  const DemoSummary summary = run_demo(options);

  std::cout << "demo pipeline complete -> " << options.out_dir.string() << "\n";
  for (const auto* eval : {&summary.eval_no_clutter, &summary.eval_clutter}) {
    const bool clutter = eval == &summary.eval_clutter;
    std::cout << (clutter ? "with clutter:" : "without clutter:") << "\n";
    for (const auto& alt : eval->alternatives) {
      std::cout << "  " << alt.label << " root score: " << eval->root_score(alt.id) << "\n";
    }
  }
  std::cout << "reports: " << summary.report_no_clutter.string() << ", "
            << summary.report_clutter.string() << "\n"
            << "comparison: " << summary.comparison.string() << "\n"
            << "untracked counts: " << summary.untracked.string() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"radar resource management evaluation pipeline"};
  app.set_version_flag("--version", std::string("rrmeval ") + kToolVersion);
  app.require_subcommand(1);

  SimulateArgs simulate_args;
  auto* simulate = app.add_subcommand("simulate", "run one scenario under one policy");
  simulate->add_option("-c,--config", simulate_args.config_path, "scenario config (TOML)")
      ->required();
  simulate->add_option("-p,--policy", simulate_args.policy, "na-nsr or a-stu")->required();
  simulate->add_option("-o,--out", simulate_args.out_dir, "output directory");
  simulate->add_option("--seed", simulate_args.seed, "override the config seed");
  simulate->add_option("--scenario-id", simulate_args.scenario_id, "override the scenario id");
  simulate->add_flag("--clutter", simulate_args.clutter, "force clutter on");
  simulate->add_flag("--no-clutter", simulate_args.no_clutter, "force clutter off");

  CollectArgs collect_args;
  auto* collect = app.add_subcommand("collect", "extract figures of merit from scenario runs");
  collect->add_option("runs", collect_args.run_specs, "alternative=run_dir specs")
      ->required()
      ->expected(-1);
  collect->add_option("-o,--out", collect_args.out_path, "measurements CSV path");

  EvaluateArgs evaluate_args;
  auto* eval_cmd = app.add_subcommand("evaluate", "score alternatives against a model");
  eval_cmd->add_option("-m,--measurements", evaluate_args.measurements_path,
                       "measurements CSV")->required();
  eval_cmd->add_option("-M,--model", evaluate_args.model_path,
                       "preference model JSON (bundled default when omitted)");
  eval_cmd->add_option("-o,--out", evaluate_args.out_dir, "output directory");
  eval_cmd->add_option("--stem", evaluate_args.stem, "report file stem");
  eval_cmd->add_option("--gauge-mode", evaluate_args.gauge_mode,
                       "discrete-owa | smoothed-quantile-owa | literal-product");
  eval_cmd->add_option("--alpha", evaluate_args.alpha, "pessimism override (>= 1)");

  CompareArgs compare_args;
  auto* compare = app.add_subcommand("compare", "per-node deltas between two reports");
  compare->add_option("left", compare_args.left_path, "left report JSON")->required();
  compare->add_option("right", compare_args.right_path, "right report JSON")->required();
  compare->add_option("--left-alt", compare_args.left_alt, "alternative id on the left");
  compare->add_option("--right-alt", compare_args.right_alt, "alternative id on the right");
  compare->add_option("-o,--out", compare_args.out_path, "write markdown here (default stdout)");

  DemoArgs demo_args;
  auto* demo = app.add_subcommand("demo", "full pipeline: both policies, clutter on/off");
  demo->add_option("-o,--out", demo_args.out_dir, "output directory");
  demo->add_option("--seed", demo_args.seed, "base scenario seed");
  demo->add_option("--gauge-mode", demo_args.gauge_mode, "gauge mode override");
  demo->add_option("--alpha", demo_args.alpha, "pessimism override (>= 1)");
  demo->add_option("--scenarios-a-stu", demo_args.scenarios_a_stu, "A+STU scenario count");
  demo->add_option("--scenarios-na-nsr", demo_args.scenarios_na_nsr, "NA+NSR scenario count");
  demo->add_option("--untracked-threshold", demo_args.untracked_threshold,
                   "completeness threshold for untracked counts");
  demo->add_flag("--no-logs", demo_args.no_logs, "skip per-scenario log files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (simulate->parsed()) return run_simulate(simulate_args);
    if (collect->parsed()) return run_collect(collect_args);
    if (eval_cmd->parsed()) return run_evaluate(evaluate_args);
    if (compare->parsed()) return run_compare(compare_args);
    if (demo->parsed()) return run_demo_cmd(demo_args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}
