// Copyright 2026 The rrmeval Authors
// SPDX-License-Identifier: Apache-2.0

#include "rrmeval/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rrmeval/rng.hpp"

namespace rrmeval {

using ordered_json = nlohmann::ordered_json;

namespace {

// Floats cross the file boundary as decimal text with 12 significant
// digits; parsing the formatted text back makes serialization canonical.
std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double canon(double v) { return std::strtod(format_double(v).c_str(), nullptr); }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& data) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw std::runtime_error("short write to " + path.string());
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else if (c != '\r') {
      field += c;
    }
  }
  fields.push_back(field);
  return fields;
}

bool parse_finite_double(const std::string& text, double* out) {
  if (text.empty()) return false;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size() || !std::isfinite(v)) return false;
  *out = v;
  return true;
}

}  // namespace

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t hash = 0xCBF29CE484222325ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001B3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

std::string hash_file(const std::filesystem::path& path) {
  return fnv1a64_hex(read_file(path));
}

// ---------------------------------------------------------------------------
// preference model (JSON)

namespace {

ordered_json capacity_to_json(const MobiusCapacity2Add& c) {
  ordered_json j;
  ordered_json singles = ordered_json::array();
  for (std::size_t i = 0; i < c.size(); ++i) singles.push_back(canon(c.singleton(i)));
  j["singletons"] = std::move(singles);
  ordered_json pairs = ordered_json::array();
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    for (std::size_t k = i + 1; k < c.size(); ++k) {
      if (c.pair(i, k) != 0.0) {
        pairs.push_back({{"a", i}, {"b", k}, {"value", canon(c.pair(i, k))}});
      }
    }
  }
  j["pairs"] = std::move(pairs);
  return j;
}

ordered_json node_to_json(const CriteriaNode& node) {
  ordered_json j;
  j["id"] = node.id;
  j["label"] = node.label;
  if (node.is_leaf()) {
    j["metric"] = node.metric_id;
    j["utility"] = node.utility_id;
    j["owa"] = node.owa_id;
  } else {
    j["capacity"] = capacity_to_json(node.capacity);
    ordered_json children = ordered_json::array();
    for (const auto& child : node.children) children.push_back(node_to_json(child));
    j["children"] = std::move(children);
  }
  return j;
}

}  // namespace

std::string serialize_preference_model(const PreferenceModel& model) {
  ordered_json j;
  j["format"] = "rrm-preference-model";
  j["version"] = model.version;

  ordered_json metrics = ordered_json::array();
  for (const auto& m : model.metrics) {
    metrics.push_back({{"id", m.id},
                       {"label", m.label},
                       {"direction", std::string(to_string(m.direction))},
                       {"range", {canon(m.range_lo), canon(m.range_hi)}},
                       {"units", m.units}});
  }
  j["metrics"] = std::move(metrics);

  ordered_json utilities = ordered_json::array();
  for (const auto& u : model.utilities) {
    ordered_json pts = ordered_json::array();
    for (const auto& [x, score] : u.breakpoints) pts.push_back({canon(x), canon(score)});
    utilities.push_back({{"id", u.id}, {"breakpoints", std::move(pts)}});
  }
  j["utilities"] = std::move(utilities);

  ordered_json owa = ordered_json::array();
  for (const auto& cfg : model.owa_configs) {
    ordered_json entry;
    entry["id"] = cfg.id;
    if (cfg.has_raw_weights()) {
      ordered_json w = ordered_json::array();
      for (double v : cfg.raw_weights) w.push_back(canon(v));
      entry["weights"] = std::move(w);
    } else {
      entry["alpha"] = canon(cfg.alpha);
    }
    entry["mode"] = std::string(to_string(cfg.mode));
    owa.push_back(std::move(entry));
  }
  j["owa"] = std::move(owa);

  j["tree"] = node_to_json(model.tree);
  return j.dump(2) + "\n";
}

std::string model_hash(const PreferenceModel& model) {
  return fnv1a64_hex(serialize_preference_model(model));
}

namespace {

struct ModelParser {
  ValidationReport& report;

  double number_at(const ordered_json& j, const std::string& where, bool* ok) {
    if (!j.is_number()) {
      report.add_error(where, "expected a number");
      *ok = false;
      return 0.0;
    }
    return j.get<double>();
  }

  std::string string_at(const ordered_json& j, const std::string& key,
                        const std::string& where, bool* ok) {
    if (!j.contains(key) || !j[key].is_string()) {
      report.add_error(where, "missing string field '" + key + "'");
      *ok = false;
      return {};
    }
    return j[key].get<std::string>();
  }

  MobiusCapacity2Add parse_capacity(const ordered_json& j, std::size_t n,
                                    const std::string& where, bool* ok) {
    MobiusCapacity2Add c(n);
    if (!j.contains("singletons") || !j["singletons"].is_array() ||
        j["singletons"].size() != n) {
      report.add_error(where, "capacity needs a 'singletons' array matching the child count");
      *ok = false;
      return c;
    }
    for (std::size_t i = 0; i < n; ++i) {
      c.set_singleton(i, number_at(j["singletons"][i], where + ".singletons", ok));
    }
    if (j.contains("pairs")) {
      for (const auto& p : j["pairs"]) {
        if (!p.contains("a") || !p.contains("b") || !p.contains("value") ||
            !p["a"].is_number_unsigned() || !p["b"].is_number_unsigned()) {
          report.add_error(where, "capacity pair entries need fields a, b, value");
          *ok = false;
          continue;
        }
        const auto a = p["a"].get<std::size_t>();
        const auto b = p["b"].get<std::size_t>();
        if (a >= n || b >= n || a == b) {
          report.add_error(where, "capacity pair indices out of range");
          *ok = false;
          continue;
        }
        c.set_pair(std::min(a, b), std::max(a, b), number_at(p["value"], where + ".pairs", ok));
      }
    }
    return c;
  }

  CriteriaNode parse_node(const ordered_json& j, const std::string& parent_path, bool* ok) {
    CriteriaNode node;
    if (!j.is_object()) {
      report.add_error(parent_path, "tree node must be an object");
      *ok = false;
      return node;
    }
    node.id = string_at(j, "id", parent_path, ok);
    const std::string path = parent_path.empty() ? node.id : parent_path + "/" + node.id;
    node.label = j.contains("label") && j["label"].is_string()
                     ? j["label"].get<std::string>()
                     : node.id;

    if (j.contains("children")) {
      if (!j["children"].is_array() || j["children"].empty()) {
        report.add_error(path, "'children' must be a nonempty array");
        *ok = false;
        return node;
      }
      for (const auto& cj : j["children"]) {
        node.children.push_back(parse_node(cj, path, ok));
      }
      if (j.contains("capacity")) {
        node.capacity = parse_capacity(j["capacity"], node.children.size(), path, ok);
      } else {
        node.capacity = MobiusCapacity2Add::uniform(node.children.size());
      }
    } else {
      node.metric_id = string_at(j, "metric", path, ok);
      node.utility_id = string_at(j, "utility", path, ok);
      node.owa_id = string_at(j, "owa", path, ok);
    }
    return node;
  }
};

}  // namespace

LoadResult<PreferenceModel> parse_preference_model(const std::string& text,
                                                   const std::string& origin) {
  LoadResult<PreferenceModel> result;
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    result.issues.add_error(origin, "not valid JSON");
    return result;
  }
  if (!j.is_object() || j.value("format", "") != "rrm-preference-model") {
    result.issues.add_error(origin, "missing format marker 'rrm-preference-model'");
    return result;
  }

  PreferenceModel model;
  model.version = j.value("version", "");
  if (model.version != kModelFormatVersion) {
    result.issues.add_warning(origin, "model version '" + model.version +
                                          "' differs from current '" +
                                          kModelFormatVersion + "'");
  }

  bool ok = true;
  ModelParser parser{result.issues};

  for (const auto& mj : j.value("metrics", ordered_json::array())) {
    MetricDef m;
    m.id = parser.string_at(mj, "id", origin + ".metrics", &ok);
    m.label = mj.value("label", m.id);
    const std::string dir = parser.string_at(mj, "direction", origin + ".metrics", &ok);
    if (auto d = direction_from_string(dir)) {
      m.direction = *d;
    } else {
      result.issues.add_error("metric " + m.id, "unknown direction '" + dir + "'");
      ok = false;
    }
    if (mj.contains("range") && mj["range"].is_array() && mj["range"].size() == 2) {
      m.range_lo = parser.number_at(mj["range"][0], "metric " + m.id, &ok);
      m.range_hi = parser.number_at(mj["range"][1], "metric " + m.id, &ok);
    } else {
      result.issues.add_error("metric " + m.id, "missing [lo, hi] range");
      ok = false;
    }
    m.units = mj.value("units", "");
    model.metrics.push_back(std::move(m));
  }

  for (const auto& uj : j.value("utilities", ordered_json::array())) {
    PiecewiseLinearUtility u;
    u.id = parser.string_at(uj, "id", origin + ".utilities", &ok);
    if (!uj.contains("breakpoints") || !uj["breakpoints"].is_array()) {
      result.issues.add_error("utility " + u.id, "missing breakpoints array");
      ok = false;
    } else {
      for (const auto& pt : uj["breakpoints"]) {
        if (!pt.is_array() || pt.size() != 2) {
          result.issues.add_error("utility " + u.id, "breakpoints must be [x, score] pairs");
          ok = false;
          continue;
        }
        u.breakpoints.emplace_back(parser.number_at(pt[0], "utility " + u.id, &ok),
                                   parser.number_at(pt[1], "utility " + u.id, &ok));
      }
    }
    model.utilities.push_back(std::move(u));
  }

  for (const auto& oj : j.value("owa", ordered_json::array())) {
    OwaConfig cfg;
    cfg.id = parser.string_at(oj, "id", origin + ".owa", &ok);
    if (oj.contains("weights")) {
      for (const auto& w : oj["weights"]) {
        cfg.raw_weights.push_back(parser.number_at(w, "owa " + cfg.id, &ok));
      }
    } else if (oj.contains("alpha")) {
      cfg.alpha = parser.number_at(oj["alpha"], "owa " + cfg.id, &ok);
    } else {
      result.issues.add_error("owa " + cfg.id, "needs either 'alpha' or 'weights'");
      ok = false;
    }
    const std::string mode = oj.value("mode", "discrete-owa");
    if (auto m = gauge_mode_from_string(mode)) {
      cfg.mode = *m;
    } else {
      result.issues.add_error("owa " + cfg.id, "unknown gauge mode '" + mode + "'");
      ok = false;
    }
    model.owa_configs.push_back(std::move(cfg));
  }

  if (!j.contains("tree")) {
    result.issues.add_error(origin, "missing criteria tree");
    ok = false;
  } else {
    model.tree = parser.parse_node(j["tree"], "", &ok);
  }

  if (ok) {
    result.issues.merge(validate_model(model));
  }
  if (result.issues.ok()) {
    result.value = std::move(model);
  }
  return result;
}

LoadResult<PreferenceModel> load_preference_model(const std::filesystem::path& path) {
  LoadResult<PreferenceModel> result;
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::exception& e) {
    result.issues.add_error(path.string(), e.what());
    return result;
  }
  return parse_preference_model(text, path.string());
}

void save_preference_model(const PreferenceModel& model, const std::filesystem::path& path) {
  write_file(path, serialize_preference_model(model));
}

// ---------------------------------------------------------------------------
// measurements (CSV)

namespace {

constexpr const char* kMeasurementHeader = "alternative_id,metric_id,scenario_id,track_id,value";

}  // namespace

void save_measurements(const MeasurementSet& set, const std::filesystem::path& path) {
  std::ostringstream out;
  out << kMeasurementHeader << "\n";
  for (const auto& [key, samples] : set.entries()) {
    for (const auto& s : samples) {
      out << key.first << ',' << key.second << ',' << s.scenario_id << ',' << s.track_id
          << ',' << format_double(s.value) << "\n";
    }
  }
  write_file(path, out.str());
}

LoadResult<MeasurementSet> load_measurements(const std::filesystem::path& path,
                                             const PreferenceModel* model) {
  LoadResult<MeasurementSet> result;
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::exception& e) {
    result.issues.add_error(path.string(), e.what());
    return result;
  }

  MeasurementSet set;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string where = path.string() + ":" + std::to_string(line_no);
    if (!header_seen) {
      if (line != kMeasurementHeader) {
        result.issues.add_error(where, "expected header '" + std::string(kMeasurementHeader) +
                                           "'");
        return result;
      }
      header_seen = true;
      continue;
    }
    const auto fields = split_csv_line(line);
    if (fields.size() != 5) {
      result.issues.add_error(where, "expected 5 fields, found " +
                                         std::to_string(fields.size()));
      continue;
    }
    if (fields[0].empty() || fields[1].empty()) {
      result.issues.add_error(where, "alternative_id and metric_id must be nonempty");
      continue;
    }
    double value = 0.0;
    if (!parse_finite_double(fields[4], &value)) {
      result.issues.add_error(where, "value '" + fields[4] + "' is not a finite number");
      continue;
    }
    if (model != nullptr) {
      const MetricDef* metric = model->find_metric(fields[1]);
      if (metric == nullptr) {
        result.issues.add_error(where, "unknown metric '" + fields[1] + "'");
        continue;
      }
      if (!metric->in_range(value)) {
        std::ostringstream msg;
        msg << "value " << fields[4] << " outside natural range [" << metric->range_lo
            << ", " << metric->range_hi << "]";
        result.issues.add_error(where, msg.str());
        continue;
      }
    }
    set.add(fields[0], fields[1], {value, fields[2], fields[3]});
  }
  if (!header_seen) {
    result.issues.add_error(path.string(), "empty file (header row required)");
    return result;
  }
  if (result.issues.ok()) result.value = std::move(set);
  return result;
}

// ---------------------------------------------------------------------------
// scenario config (TOML subset)

namespace {

// Minimal TOML reader: comments, [section] headers and scalar key = value
// lines (bool, number, "string"). That covers scenario files; no arrays or
// inline tables.
struct TomlValue {
  std::string token;
  bool is_string = false;
  int line = 0;
};

std::map<std::string, TomlValue> parse_toml_subset(const std::string& text,
                                                   const std::string& origin,
                                                   ValidationReport& report) {
  std::map<std::string, TomlValue> values;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    // strip comment (quotes in scenario files never contain '#')
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t");
    line = line.substr(first, last - first + 1);

    const std::string where = origin + ":" + std::to_string(line_no);
    if (line.front() == '[') {
      if (line.back() != ']') {
        report.add_error(where, "unterminated section header");
        continue;
      }
      section = line.substr(1, line.size() - 2);
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      report.add_error(where, "expected 'key = value'");
      continue;
    }
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    key.erase(key.find_last_not_of(" \t") + 1);
    value.erase(0, value.find_first_not_of(" \t"));
    if (key.empty() || value.empty()) {
      report.add_error(where, "expected 'key = value'");
      continue;
    }
    TomlValue tv;
    tv.line = line_no;
    if (value.front() == '"') {
      if (value.size() < 2 || value.back() != '"') {
        report.add_error(where, "unterminated string");
        continue;
      }
      tv.token = value.substr(1, value.size() - 2);
      tv.is_string = true;
    } else {
      tv.token = value;
    }
    values[section.empty() ? key : section + "." + key] = std::move(tv);
  }
  return values;
}

}  // namespace

LoadResult<ScenarioFile> parse_scenario_config(const std::string& text,
                                               const std::string& origin) {
  LoadResult<ScenarioFile> result;
  auto values = parse_toml_subset(text, origin, result.issues);
  if (!result.issues.ok()) return result;

  ScenarioFile file;
  file.config = ScenarioConfig::defaults();

  auto take = [&](const std::string& key) -> const TomlValue* {
    auto it = values.find(key);
    if (it == values.end()) return nullptr;
    return &it->second;
  };
  auto number = [&](const std::string& key, double* out) {
    if (const TomlValue* tv = take(key)) {
      double v = 0.0;
      if (tv->is_string || !parse_finite_double(tv->token, &v)) {
        result.issues.add_error(origin + ":" + std::to_string(tv->line),
                                "'" + key + "' must be a number");
        return;
      }
      *out = v;
    }
  };
  auto integer = [&](const std::string& key, int* out) {
    double v = static_cast<double>(*out);
    number(key, &v);
    *out = static_cast<int>(v);
  };
  auto boolean = [&](const std::string& key, bool* out) {
    if (const TomlValue* tv = take(key)) {
      if (tv->token == "true") {
        *out = true;
      } else if (tv->token == "false") {
        *out = false;
      } else {
        result.issues.add_error(origin + ":" + std::to_string(tv->line),
                                "'" + key + "' must be true or false");
      }
    }
  };

  if (const TomlValue* tv = take("scenario_id")) file.config.scenario_id = tv->token;
  number("duration", &file.config.duration);
  if (const TomlValue* tv = take("seed")) {
    char* end = nullptr;
    const auto seed = std::strtoull(tv->token.c_str(), &end, 10);
    if (end != tv->token.c_str() + tv->token.size()) {
      result.issues.add_error(origin + ":" + std::to_string(tv->line),
                              "'seed' must be a nonnegative integer");
    } else {
      file.config.seed = seed;
    }
  }
  boolean("clutter", &file.config.clutter);
  number("launch_region_scale", &file.config.launch_region_scale);
  integer("beam_budget", &file.config.beam_budget);
  integer("sectors", &file.config.sectors);

  for (TargetClass c : kAllTargetClasses) {
    int count = file.config.populations[c];
    integer("populations." + std::string(to_string(c)), &count);
    if (count < 0) {
      result.issues.add_error(origin, "population for " + std::string(to_string(c)) +
                                          " must be >= 0");
    }
    file.config.populations[c] = count;
  }

  number("policy.na-nsr.fixed_interval", &file.na_nsr.fixed_interval);
  number("policy.a-stu.i_min_factor", &file.a_stu.i_min_factor);
  for (TargetClass c : kAllTargetClasses) {
    number("policy.a-stu.base-intervals." + std::string(to_string(c)),
           &file.a_stu.base_intervals[c]);
  }

  if (!(file.config.duration > 0.0)) {
    result.issues.add_error(origin, "duration must be positive");
  }
  if (file.config.beam_budget <= 0) {
    result.issues.add_error(origin, "beam_budget must be positive");
  }
  if (file.config.sectors <= 0) {
    result.issues.add_error(origin, "sectors must be positive");
  }
  if (file.config.launch_region_scale < 0.0) {
    result.issues.add_error(origin, "launch_region_scale must be >= 0");
  }

  if (result.issues.ok()) result.value = std::move(file);
  return result;
}

LoadResult<ScenarioFile> load_scenario_config(const std::filesystem::path& path) {
  LoadResult<ScenarioFile> result;
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::exception& e) {
    result.issues.add_error(path.string(), e.what());
    return result;
  }
  return parse_scenario_config(text, path.string());
}

void save_scenario_config(const ScenarioFile& file, const std::filesystem::path& path) {
  std::ostringstream out;
  const ScenarioConfig& c = file.config;
  out << "scenario_id = \"" << c.scenario_id << "\"\n";
  out << "duration = " << format_double(c.duration) << "\n";
  out << "seed = " << c.seed << "\n";
  out << "clutter = " << (c.clutter ? "true" : "false") << "\n";
  out << "launch_region_scale = " << format_double(c.launch_region_scale) << "\n";
  out << "beam_budget = " << c.beam_budget << "\n";
  out << "sectors = " << c.sectors << "\n\n";
  out << "[populations]\n";
  for (const auto& [cls, count] : c.populations) {
    out << to_string(cls) << " = " << count << "\n";
  }
  out << "\n[policy.na-nsr]\n";
  out << "fixed_interval = " << format_double(file.na_nsr.fixed_interval) << "\n";
  out << "\n[policy.a-stu]\n";
  out << "i_min_factor = " << format_double(file.a_stu.i_min_factor) << "\n";
  out << "\n[policy.a-stu.base-intervals]\n";
  for (const auto& [cls, base] : file.a_stu.base_intervals) {
    out << to_string(cls) << " = " << format_double(base) << "\n";
  }
  write_file(path, out.str());
}

// ---------------------------------------------------------------------------
// scenario runs

RunManifest RunManifest::make(std::string command) {
  RunManifest m;
  m.tool_version = kToolVersion;
  m.command = std::move(command);
  m.rng_name = SplitMix64::name();
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  m.timestamp = buf;
  return m;
}

void write_manifest(const RunManifest& manifest, const std::filesystem::path& path) {
  ordered_json j;
  j["tool"] = "rrmeval";
  j["version"] = manifest.tool_version;
  j["command"] = manifest.command;
  j["timestamp"] = manifest.timestamp;
  j["rng"] = manifest.rng_name;
  j["seeds"] = manifest.seeds;
  j["input_hashes"] = manifest.input_hashes;
  j["flags"] = manifest.flags;
  write_file(path, j.dump(2) + "\n");
}

void save_scenario_run(const SimulationResult& result, const ScenarioConfig& cfg,
                       const Policy& policy, const std::filesystem::path& dir,
                       const RunManifest& manifest) {
  std::filesystem::create_directories(dir);

  std::ostringstream truths;
  truths << "target_id,class,t0,t1\n";
  for (const auto& t : result.run.truths) {
    truths << t.target_id << ',' << to_string(t.cls) << ',' << format_double(t.t0) << ','
           << format_double(t.t1) << "\n";
  }
  write_file(dir / "truths.csv", truths.str());

  std::ostringstream tracks;
  tracks << "target_id,t_start,t_end\n";
  for (const auto& t : result.run.tracks) {
    for (const auto& iv : t.tracked_intervals) {
      tracks << t.target_id << ',' << format_double(iv.start) << ',' << format_double(iv.end)
             << "\n";
    }
  }
  write_file(dir / "tracks.csv", tracks.str());

  std::ostringstream timeline;
  timeline << "t,duration,kind,sector,target_id\n";
  for (const auto& e : result.run.timeline.entries) {
    timeline << format_double(e.t) << ',' << format_double(e.duration) << ','
             << to_string(e.kind) << ',' << e.sector << ',' << e.target_id << "\n";
  }
  write_file(dir / "timeline.csv", timeline.str());

  RunManifest m = manifest;
  ordered_json j;
  j["tool"] = "rrmeval";
  j["version"] = m.tool_version;
  j["command"] = m.command;
  j["timestamp"] = m.timestamp;
  j["rng"] = m.rng_name;
  j["seeds"] = m.seeds;
  j["input_hashes"] = m.input_hashes;
  j["flags"] = m.flags;
  j["scenario"] = {{"scenario_id", result.run.scenario_id},
                   {"duration", canon(result.run.timeline.duration)},
                   {"sectors", result.run.sectors},
                   {"seed", result.seed},
                   {"policy", std::string(to_string(policy.kind))},
                   {"clutter", cfg.clutter},
                   {"beam_budget", cfg.beam_budget},
                   {"launch_region_scale", canon(cfg.launch_region_scale)},
                   {"deferred_updates", result.deferred_updates},
                   {"false_alarms", result.false_alarms}};
  write_file(dir / "run_manifest.json", j.dump(2) + "\n");
}

LoadResult<ScenarioRun> load_scenario_run(const std::filesystem::path& dir) {
  LoadResult<ScenarioRun> result;
  ScenarioRun run;

  // manifest first: scenario id, duration, sectors
  try {
    const auto j = ordered_json::parse(read_file(dir / "run_manifest.json"));
    const auto& s = j.at("scenario");
    run.scenario_id = s.at("scenario_id").get<std::string>();
    run.timeline.duration = s.at("duration").get<double>();
    run.sectors = s.at("sectors").get<int>();
  } catch (const std::exception& e) {
    result.issues.add_error((dir / "run_manifest.json").string(), e.what());
    return result;
  }

  auto load_csv = [&](const char* name, const char* header, std::size_t fields,
                      auto&& on_row) {
    std::string text;
    try {
      text = read_file(dir / name);
    } catch (const std::exception& e) {
      result.issues.add_error((dir / name).string(), e.what());
      return;
    }
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      if (line_no == 1) {
        if (line != header) {
          result.issues.add_error((dir / name).string() + ":1", "unexpected header");
          return;
        }
        continue;
      }
      const auto row = split_csv_line(line);
      if (row.size() != fields) {
        result.issues.add_error((dir / name).string() + ":" + std::to_string(line_no),
                                "expected " + std::to_string(fields) + " fields");
        continue;
      }
      on_row(row, (dir / name).string() + ":" + std::to_string(line_no));
    }
  };

  load_csv("truths.csv", "target_id,class,t0,t1", 4,
           [&](const std::vector<std::string>& row, const std::string& where) {
             TruthTrajectory t;
             t.target_id = row[0];
             if (auto cls = target_class_from_string(row[1])) {
               t.cls = *cls;
             } else {
               result.issues.add_error(where, "unknown target class '" + row[1] + "'");
               return;
             }
             if (!parse_finite_double(row[2], &t.t0) || !parse_finite_double(row[3], &t.t1)) {
               result.issues.add_error(where, "bad interval");
               return;
             }
             run.truths.push_back(std::move(t));
           });

  load_csv("tracks.csv", "target_id,t_start,t_end", 3,
           [&](const std::vector<std::string>& row, const std::string& where) {
             TimeInterval iv;
             if (!parse_finite_double(row[1], &iv.start) ||
                 !parse_finite_double(row[2], &iv.end)) {
               result.issues.add_error(where, "bad interval");
               return;
             }
             if (!run.tracks.empty() && run.tracks.back().target_id == row[0]) {
               run.tracks.back().tracked_intervals.push_back(iv);
             } else {
               run.tracks.push_back({row[0], {iv}});
             }
           });

  load_csv("timeline.csv", "t,duration,kind,sector,target_id", 5,
           [&](const std::vector<std::string>& row, const std::string& where) {
             TimelineEntry e;
             if (!parse_finite_double(row[0], &e.t) ||
                 !parse_finite_double(row[1], &e.duration)) {
               result.issues.add_error(where, "bad beam timing");
               return;
             }
             if (row[2] == "surveillance") {
               e.kind = BeamKind::Surveillance;
             } else if (row[2] == "track-update") {
               e.kind = BeamKind::TrackUpdate;
             } else {
               result.issues.add_error(where, "unknown beam kind '" + row[2] + "'");
               return;
             }
             e.sector = std::atoi(row[3].c_str());
             e.target_id = row[4];
             run.timeline.entries.push_back(std::move(e));
           });

  if (result.issues.ok()) result.value = std::move(run);
  return result;
}

// ---------------------------------------------------------------------------
// evaluation reports

namespace {

ordered_json curve_to_json(const std::vector<double>& values) {
  ordered_json arr = ordered_json::array();
  for (double v : values) arr.push_back(canon(v));
  return arr;
}

}  // namespace

ReportFiles write_report(const EvaluationResult& result, const PreferenceModel& model,
                         const std::filesystem::path& stem,
                         const std::vector<ReportFormat>& formats) {
  ReportFiles files;
  const std::string hash = model_hash(model);

  for (ReportFormat format : formats) {
    if (format == ReportFormat::Json) {
      ordered_json j;
      j["format"] = "rrmeval-report";
      j["version"] = kToolVersion;
      j["model_hash"] = hash;
      j["gauge_mode_override"] =
          result.mode_override ? ordered_json(std::string(to_string(*result.mode_override)))
                               : ordered_json(nullptr);
      j["alpha_override"] =
          result.alpha_override ? ordered_json(canon(*result.alpha_override))
                                : ordered_json(nullptr);
      ordered_json alts = ordered_json::array();
      for (const auto& a : result.alternatives) {
        alts.push_back({{"id", a.id}, {"label", a.label}});
      }
      j["alternatives"] = std::move(alts);
      j["clamp_warnings"] = result.clamp_warnings;

      ordered_json nodes = ordered_json::array();
      for (const auto& n : result.nodes) {
        ordered_json nj;
        nj["id"] = n.id;
        nj["label"] = n.label;
        nj["path"] = n.path;
        nj["depth"] = n.depth;
        nj["kind"] = n.leaf ? "leaf" : "aggregate";
        ordered_json scores;
        for (const auto& [alt, score] : n.scores) scores[alt] = canon(score);
        nj["scores"] = std::move(scores);
        if (n.leaf) {
          nj["metric"] = n.metric_id;
          ordered_json gauges;
          for (const auto& [alt, g] : n.gauges) {
            gauges[alt] = {{"score", canon(g.score)},
                           {"mode", std::string(to_string(g.mode))},
                           {"samples", g.sample_count},
                           {"bandwidth", canon(g.bandwidth)}};
            if (!g.note.empty()) gauges[alt]["note"] = g.note;
          }
          nj["gauges"] = std::move(gauges);
          ordered_json curves;
          for (const auto& [alt, c] : n.curves) {
            curves[alt] = {{"grid", curve_to_json(c.grid)},
                           {"metric_density", curve_to_json(c.metric_density)},
                           {"criterion_density", curve_to_json(c.criterion_density)},
                           {"weight", curve_to_json(c.weight)}};
          }
          nj["curves"] = std::move(curves);
        }
        nodes.push_back(std::move(nj));
      }
      j["nodes"] = std::move(nodes);

      files.json = stem;
      files.json += ".json";
      write_file(files.json, j.dump(2) + "\n");
    } else if (format == ReportFormat::Markdown) {
      std::ostringstream md;
      md << "# Evaluation report\n\n";
      md << "model hash: `" << hash << "`\n\n";
      for (const auto& a : result.alternatives) {
        md << "## " << a.label << " (" << a.id << ")\n\n";
        md << "| node | score | mode | samples |\n";
        md << "|------|-------|------|---------|\n";
        for (const auto& n : result.nodes) {
          const auto it = n.scores.find(a.id);
          if (it == n.scores.end()) continue;
          md << "| " << std::string(static_cast<std::size_t>(n.depth) * 2, ' ') << n.label
             << " | ";
          char buf[32];
          std::snprintf(buf, sizeof buf, "%.4f", it->second);
          md << buf << " | ";
          if (n.leaf) {
            const auto& g = n.gauges.at(a.id);
            md << to_string(g.mode) << " | " << g.sample_count;
          } else {
            md << "choquet-2add | -";
          }
          md << " |\n";
        }
        md << "\n";
      }
      files.markdown = stem;
      files.markdown += ".md";
      write_file(files.markdown, md.str());
    } else {
      std::filesystem::path plots_dir = stem;
      plots_dir += "_plots";
      for (const auto& n : result.nodes) {
        if (!n.leaf) continue;
        for (const auto& [alt, c] : n.curves) {
          std::ostringstream csv;
          csv << "grid,metric_density,criterion_density,weight\n";
          for (std::size_t i = 0; i < c.grid.size(); ++i) {
            csv << format_double(c.grid[i]) << ',' << format_double(c.metric_density[i]) << ','
                << format_double(c.criterion_density[i]) << ',' << format_double(c.weight[i])
                << "\n";
          }
          const auto path = plots_dir / (n.id + "__" + alt + ".csv");
          write_file(path, csv.str());
          files.plot_csvs.push_back(path);
        }
      }
    }
  }
  return files;
}

LoadResult<ReportView> load_report(const std::filesystem::path& json_path) {
  LoadResult<ReportView> result;
  std::string text;
  try {
    text = read_file(json_path);
  } catch (const std::exception& e) {
    result.issues.add_error(json_path.string(), e.what());
    return result;
  }
  const ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object() || j.value("format", "") != "rrmeval-report") {
    result.issues.add_error(json_path.string(), "not an rrmeval report");
    return result;
  }
  ReportView view;
  view.model_hash = j.value("model_hash", "");
  for (const auto& a : j.value("alternatives", ordered_json::array())) {
    view.alternative_ids.push_back(a.value("id", ""));
  }
  for (const auto& nj : j.value("nodes", ordered_json::array())) {
    ReportView::Node node;
    node.id = nj.value("id", "");
    node.path = nj.value("path", "");
    node.leaf = nj.value("kind", "") == "leaf";
    if (nj.contains("scores")) {
      for (const auto& [alt, score] : nj["scores"].items()) {
        node.scores[alt] = score.get<double>();
      }
    }
    view.nodes.push_back(std::move(node));
  }
  if (view.nodes.empty()) {
    result.issues.add_error(json_path.string(), "report carries no nodes");
    return result;
  }
  result.value = std::move(view);
  return result;
}

LoadResult<std::string> compare_reports(const ReportView& left, const std::string& left_alt,
                                        const ReportView& right, const std::string& right_alt) {
  LoadResult<std::string> result;
  if (left.model_hash != right.model_hash) {
    result.issues.add_error("compare", "model hash mismatch: " + left.model_hash + " vs " +
                                           right.model_hash);
    return result;
  }
  if (left.nodes.size() != right.nodes.size()) {
    result.issues.add_error("compare", "structural mismatch: node counts differ");
    return result;
  }
  for (std::size_t i = 0; i < left.nodes.size(); ++i) {
    if (left.nodes[i].path != right.nodes[i].path) {
      result.issues.add_error("compare", "structural mismatch at '" + left.nodes[i].path +
                                             "' vs '" + right.nodes[i].path + "'");
      return result;
    }
  }

  std::ostringstream md;
  md << "# Comparison: " << left_alt << " vs " << right_alt << "\n\n";
  md << "model hash: `" << left.model_hash << "`\n\n";
  md << "| node | " << left_alt << " | " << right_alt << " | delta | better |\n";
  md << "|------|-------|-------|-------|--------|\n";
  for (std::size_t i = 0; i < left.nodes.size(); ++i) {
    const auto lit = left.nodes[i].scores.find(left_alt);
    const auto rit = right.nodes[i].scores.find(right_alt);
    if (lit == left.nodes[i].scores.end() || rit == right.nodes[i].scores.end()) {
      result.issues.add_error("compare", "alternative missing at node '" +
                                             left.nodes[i].path + "'");
      return result;
    }
    const double delta = lit->second - rit->second;
    char lbuf[32], rbuf[32], dbuf[32];
    std::snprintf(lbuf, sizeof lbuf, "%.4f", lit->second);
    std::snprintf(rbuf, sizeof rbuf, "%.4f", rit->second);
    std::snprintf(dbuf, sizeof dbuf, "%+.4f", delta);
    md << "| " << left.nodes[i].path << " | " << lbuf << " | " << rbuf << " | " << dbuf
       << " | " << (delta > 0 ? left_alt : (delta < 0 ? right_alt : "tie")) << " |\n";
  }
  result.value = md.str();
  return result;
}

}  // namespace rrmeval
