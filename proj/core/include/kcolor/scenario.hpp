#pragma once

#include <string>
#include <vector>

#include "kcolor/geom.hpp"

namespace kcolor {

// One color class: identical disc radius, matching start and target counts.
// Targets are a set; which robot of the color ends on which target is free.
struct ColorGroup {
  double radius = 0.0;
  std::vector<geom::Point> starts;
  std::vector<geom::Point> targets;

  int robot_count() const { return static_cast<int>(starts.size()); }
};

struct Scenario {
  std::string name;
  geom::Workspace workspace;
  std::vector<ColorGroup> groups;

  int color_count() const { return static_cast<int>(groups.size()); }
  int total_robots() const {
    int n = 0;
    for (const auto& g : groups) n += g.robot_count();
    return n;
  }
};

// Throws ValidationError with a machine-readable reason code:
//   boundary_not_simple, obstacle_not_simple, obstacle_outside_boundary,
//   obstacles_overlap, no_colors, radius_not_positive, color_empty,
//   count_mismatch, coordinate_not_finite, start_not_free, target_not_free,
//   start_overlap, target_overlap.
void validate_scenario(const Scenario& sc);

}  // namespace kcolor
