// Copyright 2026 The rrmeval Authors
// SPDX-License-Identifier: Apache-2.0

#include "rrmeval/validation.hpp"

#include <sstream>

namespace rrmeval {

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (const auto& issue : issues) {
    out << (issue.severity == Severity::Error ? "error" : "warning");
    if (!issue.where.empty()) out << " [" << issue.where << "]";
    out << ": " << issue.message << "\n";
  }
  return out.str();
}

}  // namespace rrmeval
