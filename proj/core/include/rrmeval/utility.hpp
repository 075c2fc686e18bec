// Copyright 2026 The rrmeval Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rrmeval/types.hpp"
#include "rrmeval/validation.hpp"

namespace rrmeval {

/// Maps raw metric values to satisfaction scores in [0,1] by linear
/// interpolation between breakpoints. Lower-is-better metrics use
/// nonincreasing breakpoints rather than a negated metric, so raw values
/// stay readable in reports.
struct PiecewiseLinearUtility {
  std::string id;
  std::vector<std::pair<double, double>> breakpoints;  // (x, score), x strictly increasing

  static PiecewiseLinearUtility identity(std::string id = "identity");
};

/// Interpolated score at x; inputs outside the breakpoint span clamp to the
/// end scores. Throws std::invalid_argument for non-finite x.
double evaluate_utility(const PiecewiseLinearUtility& f, double x);

/// Checks breakpoint ordering, score range, endpoint scores (0 and 1 in
/// direction-appropriate order) and monotonicity in the declared direction.
ValidationReport validate_utility(const PiecewiseLinearUtility& f, Direction direction);

}  // namespace rrmeval
