#include "kcolor/driver.hpp"

#include <algorithm>
#include <chrono>

#include "kcolor/errors.hpp"
#include "kcolor/verify.hpp"

namespace kcolor::driver {

const char* mode_name(Mode m) { return m == Mode::Kbasic ? "kbasic" : "kpump"; }

PlanResult run_plan(const PlanRequest& req) {
  const auto t0 = std::chrono::steady_clock::now();
  PlannerParams params = req.params;
  params.basic_mode = req.mode == Mode::Kbasic;
  const roadmap::Deadline deadline = req.time_limit_seconds > 0.0
                                         ? roadmap::Deadline::after_seconds(req.time_limit_seconds)
                                         : roadmap::Deadline::none();

  PlanResult out;
  try {
    const roadmap::PlannerState state = roadmap::preprocess(req.scenario, params, deadline);
    out.graphs_built = static_cast<int>(state.graphs.size());
    out.failed_samples = state.failed_samples;
    out.warnings = state.warnings;

    std::vector<std::vector<geom::Point>> starts;
    std::vector<std::vector<geom::Point>> targets;
    for (const auto& g : req.scenario.groups) {
      starts.push_back(g.starts);
      targets.push_back(g.targets);
    }
    const roadmap::QueryResult qres = roadmap::query(state, starts, targets, params.q, deadline);
    out.status = qres.status;
    out.plan = qres.plan;
    out.roadmap_nodes = qres.roadmap_nodes;
    out.connection_edges = qres.connection_edges;
    out.equivalence_edges = qres.equivalence_edges;
  } catch (const TimedOutError&) {
    out.status = roadmap::QueryStatus::TimedOut;
  } catch (const SamplingExhaustedError& e) {
    out.status = roadmap::QueryStatus::Infeasible;
    out.warnings.push_back(e.what());
  }
  out.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

Scenario truncate_scenario(const Scenario& sc, int robot_count) {
  Scenario sub;
  sub.name = sc.name;
  sub.workspace = sc.workspace;
  int left = std::max(0, robot_count);
  for (const auto& g : sc.groups) {
    if (left == 0) break;
    const int take = std::min(left, g.robot_count());
    ColorGroup part;
    part.radius = g.radius;
    part.starts.assign(g.starts.begin(), g.starts.begin() + take);
    part.targets.assign(g.targets.begin(), g.targets.begin() + take);
    sub.groups.push_back(std::move(part));
    left -= take;
  }
  return sub;
}

std::vector<BenchRow> run_bench(const Scenario& sc, const PlannerParams& base,
                                const std::vector<Mode>& modes,
                                const std::vector<std::uint64_t>& seeds,
                                double time_limit_each) {
  std::vector<BenchRow> rows;
  const int total = sc.total_robots();
  for (int robots = 1; robots <= total; ++robots) {
    const Scenario sub = truncate_scenario(sc, robots);
    for (const Mode mode : modes) {
      for (const std::uint64_t seed : seeds) {
        PlanRequest req;
        req.scenario = sub;
        req.params = base;
        req.params.seed = seed;
        req.mode = mode;
        req.time_limit_seconds = time_limit_each;
        const PlanResult res = run_plan(req);
        BenchRow row;
        row.robots = robots;
        row.mode = mode;
        row.seed = seed;
        row.status = res.status;
        row.seconds = res.wall_seconds;
        if (res.status == roadmap::QueryStatus::Solved) {
          const verify::PlanStats stats = verify::plan_stats(res.plan);
          row.steps = stats.step_count;
          row.length = stats.total_length;
        }
        rows.push_back(row);
      }
    }
  }
  return rows;
}

}  // namespace kcolor::driver
