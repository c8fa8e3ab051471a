#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kcolor/driver.hpp"
#include "kcolor/errors.hpp"
#include "kcolor/pebble.hpp"
#include "kcolor/serialize.hpp"
#include "kcolor/svg.hpp"
#include "kcolor/verify.hpp"

namespace {

using kcolor::Error;
using kcolor::Scenario;

struct PlanArgs {
  std::string scenario;
  std::string out;
  std::string baseline;
  int g = 10;
  int q = 50;
  int mu = 0;
  std::uint64_t seed = 0;
  double time_limit = 0.0;
  int threads = 1;
};

int cmd_plan(const PlanArgs& args) {
  const Scenario sc = kcolor::load_scenario(args.scenario);

  kcolor::driver::Mode mode = kcolor::driver::Mode::Kpump;
  if (!args.baseline.empty()) {
    if (args.baseline != "kbasic") {
      std::cerr << "error: unknown baseline \"" << args.baseline << "\" (supported: kbasic)\n";
      return 1;
    }
    mode = kcolor::driver::Mode::Kbasic;
  }
  if (mode == kcolor::driver::Mode::Kpump && args.mu <= 0) {
    std::cerr << "error: --mu must be a positive point budget\n";
    return 1;
  }

  kcolor::driver::PlanRequest req;
  req.scenario = sc;
  req.params.g = args.g;
  req.params.q = args.q;
  req.params.mu = args.mu;
  req.params.seed = args.seed;
  req.params.threads = args.threads;
  req.mode = mode;
  req.time_limit_seconds = args.time_limit;

  const kcolor::driver::PlanResult res = kcolor::driver::run_plan(req);
  for (const auto& w : res.warnings) std::cerr << "warning: " << w << "\n";

  switch (res.status) {
    case kcolor::roadmap::QueryStatus::Solved: {
      kcolor::PlanFile pf;
      pf.scenario_name = sc.name;
      pf.mode = kcolor::driver::mode_name(mode);
      pf.params = req.params;
      pf.plan = res.plan;
      kcolor::save_plan(pf, args.out);
      const auto stats = kcolor::verify::plan_stats(res.plan);
      std::cout << "solved scenario=" << sc.name << " robots=" << sc.total_robots()
                << " steps=" << stats.step_count << " length=" << stats.total_length
                << " graphs=" << res.graphs_built << " nodes=" << res.roadmap_nodes
                << " conn_edges=" << res.connection_edges
                << " equiv_edges=" << res.equivalence_edges << " time="
                << res.wall_seconds << "s out=" << args.out << "\n";
      return 0;
    }
    case kcolor::roadmap::QueryStatus::TimedOut:
      std::cerr << "no plan: time limit of " << args.time_limit << "s exceeded after "
                << res.wall_seconds << "s\n";
      return 2;
    case kcolor::roadmap::QueryStatus::Infeasible:
    default:
      std::cerr << "no plan: start and target are not connected in the roadmap (graphs="
                << res.graphs_built << ", nodes=" << res.roadmap_nodes
                << ", conn_edges=" << res.connection_edges << ", time=" << res.wall_seconds
                << "s)\n";
      return 2;
  }
}

struct VerifyArgs {
  std::string scenario;
  std::string plan;
  std::string report;
  double eps = 1e-6;
};

int cmd_verify(const VerifyArgs& args) {
  const Scenario sc = kcolor::load_scenario(args.scenario);
  const kcolor::PlanFile pf = kcolor::load_plan(args.plan);
  if (!pf.scenario_name.empty() && !sc.name.empty() && pf.scenario_name != sc.name) {
    std::cerr << "warning: plan was produced for scenario \"" << pf.scenario_name
              << "\", verifying against \"" << sc.name << "\"\n";
  }
  const auto report = kcolor::verify::verify_plan(sc, pf.plan, args.eps);
  if (!args.report.empty()) {
    std::ofstream out(args.report, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write report to " << args.report << "\n";
      return 1;
    }
    out << kcolor::report_to_json(report);
  }
  if (report.pass) {
    std::cout << "PASS steps=" << report.steps_checked << "\n";
    return 0;
  }
  std::cout << "FAIL steps=" << report.steps_checked
            << " violations=" << report.violations.size() << "\n";
  const std::size_t show = std::min<std::size_t>(report.violations.size(), 10);
  for (std::size_t i = 0; i < show; ++i) {
    const auto& v = report.violations[i];
    std::cout << "  step " << v.step << " " << v.code << ": " << v.detail << "\n";
  }
  if (show < report.violations.size()) {
    std::cout << "  ... " << (report.violations.size() - show) << " more\n";
  }
  return 1;
}

int cmd_pebble(const std::string& input) {
  std::ifstream in(input);
  if (!in) {
    std::cerr << "error: cannot open " << input << "\n";
    return 1;
  }
  const kcolor::pebble::PebbleInstance inst = kcolor::pebble::parse_pebble_instance(in);
  try {
    const kcolor::pebble::PebblePath path =
        kcolor::pebble::pebble_solve(inst.graph, inst.start, inst.target);
    if (!kcolor::pebble::validate_pebble_path(inst.graph, path, inst.target)) {
      throw kcolor::InternalError("solver produced an invalid pebble path");
    }
    for (const auto& mv : path.moves) {
      std::cout << "pebble " << mv.pebble << ": " << mv.from << " -> " << mv.to << "\n";
    }
    std::cout << "moves: " << path.moves.size() << "\n";
    return 0;
  } catch (const kcolor::NotEquivalentError& e) {
    std::cerr << "not equivalent: " << e.what() << "\n";
    return 2;
  }
}

struct SvgArgs {
  std::string scenario;
  std::string plan;
  std::string out;
  double seconds_per_step = 0.5;
};

int cmd_svg(const SvgArgs& args) {
  const Scenario sc = kcolor::load_scenario(args.scenario);
  kcolor::Plan plan;
  const kcolor::Plan* plan_ptr = nullptr;
  if (!args.plan.empty()) {
    plan = kcolor::load_plan(args.plan).plan;
    plan_ptr = &plan;
  }
  kcolor::svg::SvgOptions opts;
  opts.seconds_per_step = args.seconds_per_step;
  std::ofstream out(args.out, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << args.out << "\n";
    return 1;
  }
  out << kcolor::svg::render(sc, plan_ptr, opts);
  std::cout << "wrote " << args.out << "\n";
  return 0;
}

struct BenchArgs {
  std::string scenario;
  std::string planners = "kpump,kbasic";
  int g = 10;
  int q = 50;
  int mu = 0;
  int seeds = 5;
  double time_limit = 60.0;
  int threads = 1;
};

int cmd_bench(const BenchArgs& args) {
  const Scenario sc = kcolor::load_scenario(args.scenario);

  std::vector<kcolor::driver::Mode> modes;
  std::stringstream ss(args.planners);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token == "kpump") {
      modes.push_back(kcolor::driver::Mode::Kpump);
    } else if (token == "kbasic") {
      modes.push_back(kcolor::driver::Mode::Kbasic);
    } else if (!token.empty()) {
      std::cerr << "error: unknown planner \"" << token << "\"\n";
      return 1;
    }
  }
  if (modes.empty()) {
    std::cerr << "error: no planners selected\n";
    return 1;
  }
  const bool needs_mu =
      std::find(modes.begin(), modes.end(), kcolor::driver::Mode::Kpump) != modes.end();
  if (needs_mu && args.mu <= 0) {
    std::cerr << "error: --mu must be a positive point budget\n";
    return 1;
  }

  std::vector<std::uint64_t> seeds;
  for (int s = 0; s < args.seeds; ++s) seeds.push_back(static_cast<std::uint64_t>(s));

  kcolor::PlannerParams base;
  base.g = args.g;
  base.q = args.q;
  base.mu = args.mu;
  base.threads = args.threads;

  const auto rows =
      kcolor::driver::run_bench(sc, base, modes, seeds, args.time_limit);

  std::printf("%7s %-7s %5s %-10s %9s %6s %10s\n", "robots", "planner", "seed", "status",
              "seconds", "steps", "length");
  for (const auto& row : rows) {
    const char* status = row.status == kcolor::roadmap::QueryStatus::Solved ? "solved"
                         : row.status == kcolor::roadmap::QueryStatus::TimedOut ? "timeout"
                                                                                : "infeasible";
    std::printf("%7d %-7s %5llu %-10s %9.2f %6d %10.2f\n", row.robots,
                kcolor::driver::mode_name(row.mode),
                static_cast<unsigned long long>(row.seed), status, row.seconds, row.steps,
                row.length);
  }

  std::printf("\n%7s %-7s %8s %9s\n", "robots", "planner", "solved", "median_s");
  for (int robots = 1; robots <= sc.total_robots(); ++robots) {
    for (const auto mode : modes) {
      std::vector<double> times;
      int solved = 0;
      int runs = 0;
      for (const auto& row : rows) {
        if (row.robots != robots || row.mode != mode) continue;
        ++runs;
        if (row.status == kcolor::roadmap::QueryStatus::Solved) ++solved;
        times.push_back(row.seconds);
      }
      if (runs == 0) continue;
      std::sort(times.begin(), times.end());
      const double median = times[times.size() / 2];
      std::printf("%7d %-7s %5d/%-2d %9.2f\n", robots, kcolor::driver::mode_name(mode),
                  solved, runs, median);
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sampling-based planner for k-color disc robots among polygonal obstacles"};
  app.require_subcommand(1);

  PlanArgs plan_args;
  auto* plan = app.add_subcommand("plan", "plan motions for a scenario");
  plan->add_option("--scenario", plan_args.scenario, "scenario JSON file")->required();
  plan->add_option("--g", plan_args.g, "number of sampled composite pebble graphs");
  plan->add_option("--q", plan_args.q, "connections kept per graph pair");
  plan->add_option("--mu", plan_args.mu, "total pumped points across colors");
  plan->add_option("--seed", plan_args.seed, "random seed");
  plan->add_option("--out", plan_args.out, "output plan JSON file")->required();
  plan->add_option("--baseline", plan_args.baseline, "planner variant (kbasic)");
  plan->add_option("--time-limit", plan_args.time_limit, "wall-clock budget in seconds");
  plan->add_option("--threads", plan_args.threads, "worker threads");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "check a plan against a scenario");
  verify->add_option("--scenario", verify_args.scenario, "scenario JSON file")->required();
  verify->add_option("--plan", verify_args.plan, "plan JSON file")->required();
  verify->add_option("--eps", verify_args.eps, "position tolerance");
  verify->add_option("--report", verify_args.report, "write the JSON report here");

  std::string pebble_input;
  auto* pebble = app.add_subcommand("pebble", "solve a pebble motion instance");
  pebble->add_option("--input", pebble_input, "plain-text instance file")->required();

  SvgArgs svg_args;
  auto* svg = app.add_subcommand("svg", "render a scenario (and plan) as animated SVG");
  svg->add_option("--scenario", svg_args.scenario, "scenario JSON file")->required();
  svg->add_option("--plan", svg_args.plan, "plan JSON file");
  svg->add_option("--out", svg_args.out, "output SVG file")->required();
  svg->add_option("--seconds-per-step", svg_args.seconds_per_step, "animation pace");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "incremental-robot comparison table");
  bench->add_option("--scenario", bench_args.scenario, "scenario JSON file")->required();
  bench->add_option("--planners", bench_args.planners, "comma list: kpump,kbasic");
  bench->add_option("--g", bench_args.g, "number of sampled composite pebble graphs");
  bench->add_option("--q", bench_args.q, "connections kept per graph pair");
  bench->add_option("--mu", bench_args.mu, "total pumped points across colors");
  bench->add_option("--seeds", bench_args.seeds, "seeds 0..N-1 per configuration");
  bench->add_option("--time-limit", bench_args.time_limit, "per-run budget in seconds");
  bench->add_option("--threads", bench_args.threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*plan) return cmd_plan(plan_args);
    if (*verify) return cmd_verify(verify_args);
    if (*pebble) return cmd_pebble(pebble_input);
    if (*svg) return cmd_svg(svg_args);
    if (*bench) return cmd_bench(bench_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
