#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kcolor/pebble.hpp"
#include "kcolor/plan.hpp"
#include "kcolor/scenario.hpp"

namespace kcolor::verify {

struct Violation {
  int step = -1;  // -1 for plan-level problems
  std::string code;
  std::string detail;
};

struct VerificationReport {
  bool pass = false;
  int steps_checked = 0;
  std::vector<Violation> violations;
};

// Independent plan checker. Replays the plan against the scenario using the
// raw geometric predicates (no planner slack) and reports every violation:
//   bad_structure        step shape or robot roster is wrong
//   start_mismatch       initial positions differ from the scenario starts
//   discontinuity        a motion does not start where the robot last ended
//   workspace_collision  a swept or stationary disc hits boundary/obstacle
//   robot_collision      two discs get closer than the sum of radii
//   target_mismatch      final positions are not a per-color matching of
//                        the targets
// eps bounds position comparisons (continuity, start and target matching);
// collision predicates are exact.
VerificationReport verify_plan(const Scenario& sc, const Plan& plan, double eps = 1e-6);

struct PebbleReachability {
  bool reachable = false;
  int min_moves = -1;
};

// Exhaustive breadth-first search over occupied vertex sets; pebbles are
// interchangeable. Throws StateSpaceTooLargeError beyond state_limit.
PebbleReachability brute_force_pebble_oracle(const pebble::Graph& g,
                                             const pebble::Placement& s,
                                             const pebble::Placement& t,
                                             std::uint64_t state_limit = 1000000);

struct PlanStats {
  int step_count = 0;
  double total_length = 0.0;
  std::vector<std::vector<double>> per_robot_length;
  double simultaneous_fraction = 0.0;
};

// robots_per_color fixes the roster; pass empty to infer it from the plan.
PlanStats plan_stats(const Plan& plan, const std::vector<int>& robots_per_color = {});

}  // namespace kcolor::verify
