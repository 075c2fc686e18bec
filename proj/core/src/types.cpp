// Copyright 2026 The rrmeval Authors
// SPDX-License-Identifier: Apache-2.0

#include "rrmeval/types.hpp"

namespace rrmeval {

std::string_view to_string(Direction d) {
  return d == Direction::HigherBetter ? "higher-better" : "lower-better";
}

std::optional<Direction> direction_from_string(std::string_view s) {
  if (s == "higher-better") return Direction::HigherBetter;
  if (s == "lower-better") return Direction::LowerBetter;
  return std::nullopt;
}

std::string_view to_string(TargetClass c) {
  switch (c) {
    case TargetClass::BallisticMissile: return "ballistic-missile";
    case TargetClass::CommercialAircraft: return "commercial-aircraft";
    case TargetClass::RecreationalAircraft: return "recreational-aircraft";
    case TargetClass::Bird: return "bird";
    case TargetClass::Ship: return "ship";
    case TargetClass::RecreationalBoat: return "recreational-boat";
  }
  return "unknown";
}

std::optional<TargetClass> target_class_from_string(std::string_view s) {
  for (TargetClass c : kAllTargetClasses) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

bool is_air_target(TargetClass c) {
  switch (c) {
    case TargetClass::BallisticMissile:
    case TargetClass::CommercialAircraft:
    case TargetClass::RecreationalAircraft:
    case TargetClass::Bird:
      return true;
    default:
      return false;
  }
}

bool is_small_target(TargetClass c) {
  switch (c) {
    case TargetClass::RecreationalAircraft:
    case TargetClass::Bird:
    case TargetClass::RecreationalBoat:
      return true;
    default:
      return false;
  }
}

}  // namespace rrmeval
