// Copyright 2026 The rrmeval Authors
// SPDX-License-Identifier: Apache-2.0

#include "rrmeval/utility.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rrmeval {

PiecewiseLinearUtility PiecewiseLinearUtility::identity(std::string id) {
  return {std::move(id), {{0.0, 0.0}, {1.0, 1.0}}};
}

double evaluate_utility(const PiecewiseLinearUtility& f, double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("utility input must be finite");
  if (f.breakpoints.size() < 2) throw std::invalid_argument("utility needs at least 2 breakpoints");

  const auto& pts = f.breakpoints;
  if (x <= pts.front().first) return pts.front().second;
  if (x >= pts.back().first) return pts.back().second;

  auto upper = std::upper_bound(pts.begin(), pts.end(), x,
                                [](double v, const auto& p) { return v < p.first; });
  const auto& hi = *upper;
  const auto& lo = *(upper - 1);
  if (x == lo.first) return lo.second;
  const double t = (x - lo.first) / (hi.first - lo.first);
  return lo.second + t * (hi.second - lo.second);
}

ValidationReport validate_utility(const PiecewiseLinearUtility& f, Direction direction) {
  ValidationReport report;
  const std::string where = f.id.empty() ? "utility" : "utility " + f.id;
  const auto& pts = f.breakpoints;

  if (pts.size() < 2) {
    report.add_error(where, "needs at least 2 breakpoints");
    return report;
  }
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (!std::isfinite(pts[k].first) || !std::isfinite(pts[k].second)) {
      report.add_error(where, "breakpoint " + std::to_string(k + 1) + " is not finite");
      return report;
    }
    if (pts[k].second < 0.0 || pts[k].second > 1.0) {
      std::ostringstream msg;
      msg << "score " << pts[k].second << " at breakpoint " << (k + 1) << " outside [0,1]";
      report.add_error(where, msg.str());
    }
    if (k > 0 && !(pts[k].first > pts[k - 1].first)) {
      report.add_error(where, "breakpoint x values must be strictly increasing");
    }
  }

  const bool increasing = direction == Direction::HigherBetter;
  for (std::size_t k = 1; k < pts.size(); ++k) {
    const double step = pts[k].second - pts[k - 1].second;
    if ((increasing && step < 0.0) || (!increasing && step > 0.0)) {
      std::ostringstream msg;
      msg << "scores must be " << (increasing ? "nondecreasing" : "nonincreasing")
          << " for a " << to_string(direction) << " metric (violated at breakpoint " << (k + 1)
          << ")";
      report.add_error(where, msg.str());
      break;
    }
  }

  const double first_expected = increasing ? 0.0 : 1.0;
  const double last_expected = increasing ? 1.0 : 0.0;
  if (pts.front().second != first_expected) {
    std::ostringstream msg;
    msg << "first score is " << pts.front().second << ", expected " << first_expected;
    report.add_error(where, msg.str());
  }
  if (pts.back().second != last_expected) {
    std::ostringstream msg;
    msg << "last score is " << pts.back().second << ", expected " << last_expected;
    report.add_error(where, msg.str());
  }
  return report;
}

}  // namespace rrmeval
