// Copyright 2026 The rrmeval Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace rrmeval {

enum class Severity { Warning, Error };

/// One violation or warning found while validating data. Violations are
/// data, not failures: validators return reports instead of throwing.
struct ValidationIssue {
  Severity severity = Severity::Error;
  std::string where;    // node id, file:line, field path, ...
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  void add_error(std::string where, std::string message) {
    issues.push_back({Severity::Error, std::move(where), std::move(message)});
  }
  void add_warning(std::string where, std::string message) {
    issues.push_back({Severity::Warning, std::move(where), std::move(message)});
  }
  void merge(const ValidationReport& other) {
    issues.insert(issues.end(), other.issues.begin(), other.issues.end());
  }

  std::size_t error_count() const {
    std::size_t n = 0;
    for (const auto& i : issues) {
      if (i.severity == Severity::Error) ++n;
    }
    return n;
  }
  std::size_t warning_count() const { return issues.size() - error_count(); }

  /// True when the report carries no errors (warnings allowed).
  bool ok() const { return error_count() == 0; }
  bool empty() const { return issues.empty(); }

  /// All issues joined into one human-readable block, one line each.
  std::string to_string() const;
};

}  // namespace rrmeval
