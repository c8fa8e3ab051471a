#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kcolor/plan.hpp"
#include "kcolor/roadmap.hpp"
#include "kcolor/scenario.hpp"

namespace kcolor::driver {

enum class Mode { Kpump, Kbasic };

const char* mode_name(Mode m);

struct PlanRequest {
  Scenario scenario;
  PlannerParams params;
  Mode mode = Mode::Kpump;
  double time_limit_seconds = 0.0;  // <= 0 disables the deadline
};

struct PlanResult {
  roadmap::QueryStatus status = roadmap::QueryStatus::Infeasible;
  Plan plan;
  double wall_seconds = 0.0;
  int graphs_built = 0;
  int failed_samples = 0;
  int roadmap_nodes = 0;
  long long connection_edges = 0;
  long long equivalence_edges = 0;
  std::vector<std::string> warnings;
};

// Preprocess plus one start-to-target query on the scenario's own
// configurations. Kbasic forces the degenerate pumping (one point per
// robot), which reduces the planner to chaining whole-configuration
// connections.
PlanResult run_plan(const PlanRequest& req);

// Scenario restricted to the first robot_count robots in color-major
// order; colors left with no robots are dropped.
Scenario truncate_scenario(const Scenario& sc, int robot_count);

struct BenchRow {
  int robots = 0;
  Mode mode = Mode::Kpump;
  std::uint64_t seed = 0;
  roadmap::QueryStatus status = roadmap::QueryStatus::Infeasible;
  double seconds = 0.0;
  int steps = 0;
  double length = 0.0;
};

// Incremental-robot protocol: for each robot count from 1 to the full
// roster, run every (mode, seed) combination under the per-run time limit.
std::vector<BenchRow> run_bench(const Scenario& sc, const PlannerParams& base,
                                const std::vector<Mode>& modes,
                                const std::vector<std::uint64_t>& seeds,
                                double time_limit_each);

}  // namespace kcolor::driver
