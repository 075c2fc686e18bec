// Copyright 2026 The rrmeval Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace rrmeval {

/// Preference direction of a metric: whether larger raw values are better.
enum class Direction { HigherBetter, LowerBetter };

std::string_view to_string(Direction d);
std::optional<Direction> direction_from_string(std::string_view s);

/// The six target classes the evaluation distinguishes.
enum class TargetClass {
  BallisticMissile,
  CommercialAircraft,
  RecreationalAircraft,
  Bird,
  Ship,
  RecreationalBoat,
};

inline constexpr std::array<TargetClass, 6> kAllTargetClasses = {
    TargetClass::BallisticMissile,   TargetClass::CommercialAircraft,
    TargetClass::RecreationalAircraft, TargetClass::Bird,
    TargetClass::Ship,               TargetClass::RecreationalBoat,
};

std::string_view to_string(TargetClass c);
std::optional<TargetClass> target_class_from_string(std::string_view s);

bool is_air_target(TargetClass c);
/// Small radar cross-section classes take the stronger clutter penalty.
bool is_small_target(TargetClass c);

}  // namespace rrmeval
