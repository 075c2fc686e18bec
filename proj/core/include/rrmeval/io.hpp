// Copyright 2026 The rrmeval Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rrmeval/evaluate.hpp"
#include "rrmeval/model.hpp"
#include "rrmeval/simulator.hpp"
#include "rrmeval/validation.hpp"

namespace rrmeval {

/// Loaders return the parsed object together with the issues found; on
/// errors the value is absent and the report says where and why, with
/// row/field locations.
template <typename T>
struct LoadResult {
  std::optional<T> value;
  ValidationReport issues;

  bool ok() const { return value.has_value() && issues.ok(); }
};

/// FNV-1a 64-bit over raw bytes, as a 16-digit hex string. Used for
/// provenance hashes in manifests and reports.
std::string fnv1a64_hex(std::string_view bytes);
std::string hash_file(const std::filesystem::path& path);

// --- preference model (JSON) -----------------------------------------------

/// Canonical JSON serialization of a model; stable key order and fixed float
/// formatting, so equal models serialize byte-identically.
std::string serialize_preference_model(const PreferenceModel& model);

std::string model_hash(const PreferenceModel& model);

/// Parses and fully validates a model file. A version other than the
/// current format version is a warning, not an error.
LoadResult<PreferenceModel> load_preference_model(const std::filesystem::path& path);
LoadResult<PreferenceModel> parse_preference_model(const std::string& text,
                                                   const std::string& origin = "model");

void save_preference_model(const PreferenceModel& model, const std::filesystem::path& path);

// --- measurements (CSV) -----------------------------------------------------

/// Header: alternative_id,metric_id,scenario_id,track_id,value. Values are
/// written as decimal text with 12 significant digits; save followed by load
/// reproduces the set exactly.
void save_measurements(const MeasurementSet& set, const std::filesystem::path& path);

/// Malformed rows are reported with their line numbers. When a model is
/// given, values outside the metric's natural range are rejected.
LoadResult<MeasurementSet> load_measurements(const std::filesystem::path& path,
                                             const PreferenceModel* model = nullptr);

// --- scenario config (TOML subset) ------------------------------------------

/// A scenario file bundles the scenario parameters with optional policy
/// overrides for either alternative.
struct ScenarioFile {
  ScenarioConfig config;
  Policy na_nsr = Policy::na_nsr();
  Policy a_stu = Policy::a_stu();
};

LoadResult<ScenarioFile> load_scenario_config(const std::filesystem::path& path);
LoadResult<ScenarioFile> parse_scenario_config(const std::string& text,
                                               const std::string& origin = "scenario");
void save_scenario_config(const ScenarioFile& file, const std::filesystem::path& path);

// --- scenario outputs (CSV + manifest) ---------------------------------------

/// Reproducibility record emitted next to every output set.
struct RunManifest {
  std::string tool_version;
  std::string command;
  std::vector<std::uint64_t> seeds;
  std::map<std::string, std::string> input_hashes;  // path (or role) -> hash
  std::map<std::string, std::string> flags;
  std::string rng_name;
  std::string timestamp;  // RFC 3339, UTC

  static RunManifest make(std::string command);  // fills version/timestamp
};

void write_manifest(const RunManifest& manifest, const std::filesystem::path& path);

/// truths.csv, tracks.csv, timeline.csv and run_manifest.json in `dir`.
void save_scenario_run(const SimulationResult& result, const ScenarioConfig& cfg,
                       const Policy& policy, const std::filesystem::path& dir,
                       const RunManifest& manifest);

LoadResult<ScenarioRun> load_scenario_run(const std::filesystem::path& dir);

// --- evaluation reports -------------------------------------------------------

enum class ReportFormat { Json, Markdown, PlotCsv };

struct ReportFiles {
  std::filesystem::path json;
  std::filesystem::path markdown;
  std::vector<std::filesystem::path> plot_csvs;
};

/// Writes the evaluation under `stem` in the requested formats:
/// <stem>.json (machine interface, deterministic bytes), <stem>.md (gauge
/// tables per alternative, depth-first) and <stem>_plots/<leaf>__<alt>.csv
/// (grid, metric density, criterion density, weight curve). Throws on
/// unwritable paths.
ReportFiles write_report(const EvaluationResult& result, const PreferenceModel& model,
                         const std::filesystem::path& stem,
                         const std::vector<ReportFormat>& formats = {
                             ReportFormat::Json, ReportFormat::Markdown,
                             ReportFormat::PlotCsv});

/// Minimal view of a written report, used by compare.
struct ReportView {
  std::string model_hash;
  std::vector<std::string> alternative_ids;
  struct Node {
    std::string id;
    std::string path;
    bool leaf = false;
    std::map<std::string, double> scores;
  };
  std::vector<Node> nodes;
};

LoadResult<ReportView> load_report(const std::filesystem::path& json_path);

/// Per-node deltas between two reports as a sign-coded markdown table.
/// Reports must share the model hash and tree structure; node sets that do
/// not match are a structural-mismatch error.
LoadResult<std::string> compare_reports(const ReportView& left, const std::string& left_alt,
                                        const ReportView& right, const std::string& right_alt);

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kModelFormatVersion = "1";

}  // namespace rrmeval
