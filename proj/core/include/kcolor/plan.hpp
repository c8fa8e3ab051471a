#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "kcolor/geom.hpp"

namespace kcolor {

struct RobotId {
  int color = 0;
  int index = 0;  // position within the color
};

inline bool operator==(RobotId a, RobotId b) {
  return a.color == b.color && a.index == b.index;
}
inline bool operator<(RobotId a, RobotId b) {
  return std::tie(a.color, a.index) < std::tie(b.color, b.index);
}

struct RobotMotion {
  RobotId robot;
  geom::LinearMotion motion;
};

inline bool operator==(const RobotMotion& a, const RobotMotion& b) {
  return a.robot == b.robot && a.motion == b.motion;
}

// A plan alternates two step kinds. A Single step moves exactly one robot
// while all others hold position. A Simultaneous step lists a motion for
// every robot over one shared clock; stationary robots get a degenerate
// motion. Consecutive motions of each robot must chain: the next starts
// where the previous ended.
struct PlanStep {
  enum class Kind { Single, Simultaneous };
  Kind kind = Kind::Single;
  std::vector<RobotMotion> motions;
};

inline bool operator==(const PlanStep& a, const PlanStep& b) {
  return a.kind == b.kind && a.motions == b.motions;
}

struct Plan {
  std::vector<PlanStep> steps;
};

inline bool operator==(const Plan& a, const Plan& b) { return a.steps == b.steps; }

struct PlannerParams {
  int g = 10;               // number of sampled composite pebble graphs
  int q = 50;               // connection attempts kept per graph pair
  int mu = 0;               // total pumped points across colors
  std::uint64_t seed = 0;
  int attempt_factor = 20;  // connection attempts = attempt_factor * q
  int max_tries = 100000;   // global rejection-sampling budget per graph
  bool basic_mode = false;  // degenerate pumping: exactly one point per robot
  int threads = 1;
};

}  // namespace kcolor
