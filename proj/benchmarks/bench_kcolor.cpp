#include <benchmark/benchmark.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "kcolor/congen.hpp"
#include "kcolor/geom.hpp"
#include "kcolor/graphgen.hpp"
#include "kcolor/pebble.hpp"
#include "kcolor/rng.hpp"
#include "kcolor/roadmap.hpp"
#include "kcolor/scenario.hpp"

namespace {

using kcolor::SplitRng;
using kcolor::geom::LinearMotion;
using kcolor::geom::Point;
using kcolor::geom::Polygon;
using kcolor::geom::Workspace;

Workspace bench_workspace() {
  Workspace w;
  w.boundary = Polygon({{0, 0}, {20, 0}, {20, 20}, {0, 20}});
  w.obstacles.push_back(Polygon({{6, 6}, {9, 6}, {9, 9}, {6, 9}}));
  w.obstacles.push_back(Polygon({{12, 11}, {15, 11}, {15, 14}, {12, 14}}));
  return w;
}

std::vector<LinearMotion> random_motions(std::size_t count, std::uint64_t seed) {
  SplitRng rng(seed);
  std::vector<LinearMotion> motions;
  motions.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    motions.push_back({{rng.next_in(0, 20), rng.next_in(0, 20)},
                       {rng.next_in(0, 20), rng.next_in(0, 20)}});
  }
  return motions;
}

void BM_MinDistLinearMotions(benchmark::State& state) {
  const auto motions = random_motions(1024, 1);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& a = motions[i % motions.size()];
    const auto& b = motions[(i * 7 + 3) % motions.size()];
    benchmark::DoNotOptimize(kcolor::geom::min_dist_linear_motions(a, b));
    ++i;
  }
}
BENCHMARK(BM_MinDistLinearMotions);

void BM_DistSegmentSegment(benchmark::State& state) {
  const auto motions = random_motions(1024, 2);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& a = motions[i % motions.size()];
    const auto& b = motions[(i * 5 + 1) % motions.size()];
    benchmark::DoNotOptimize(
        kcolor::geom::dist_segment_segment(a.from, a.to, b.from, b.to));
    ++i;
  }
}
BENCHMARK(BM_DistSegmentSegment);

void BM_SweepFree(benchmark::State& state) {
  const Workspace w = bench_workspace();
  const auto motions = random_motions(1024, 3);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kcolor::geom::sweep_free(motions[i % motions.size()], 0.5, w));
    ++i;
  }
}
BENCHMARK(BM_SweepFree);

void BM_PebbleSolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SplitRng rng(4);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    edges.emplace_back(static_cast<int>(rng.next_below(v)), v);  // random tree
  }
  for (int extra = 0; extra < n / 2; ++extra) {
    const int u = static_cast<int>(rng.next_below(n));
    const int v = static_cast<int>(rng.next_below(n));
    if (u != v) edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  const kcolor::pebble::Graph g(n, edges);
  std::vector<int> verts(n);
  for (int v = 0; v < n; ++v) verts[v] = v;
  rng.shuffle(verts);
  const kcolor::pebble::Placement start(verts.begin(), verts.begin() + n / 2);
  rng.shuffle(verts);
  const kcolor::pebble::Placement target(verts.begin(), verts.begin() + n / 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kcolor::pebble::pebble_solve(g, start, target));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_PebbleSolve)->Arg(32)->Arg(128)->Arg(512)->Complexity();

std::vector<kcolor::graphgen::ColorSpec> bench_colors() {
  return {{0, 0.6, 3}, {1, 0.4, 2}};
}

void BM_SamplePumped(benchmark::State& state) {
  const int mu = static_cast<int>(state.range(0));
  const Workspace w = bench_workspace();
  const auto colors = bench_colors();
  std::uint64_t seed = 0;
  for (auto _ : state) {
    SplitRng rng(seed++);
    benchmark::DoNotOptimize(kcolor::graphgen::sample_pumped(colors, w, mu, rng));
  }
}
BENCHMARK(BM_SamplePumped)->Arg(20)->Arg(60);

void BM_BuildPebbleGraph(benchmark::State& state) {
  const int mu = static_cast<int>(state.range(0));
  const Workspace w = bench_workspace();
  SplitRng rng(5);
  const auto pumped = kcolor::graphgen::sample_pumped(bench_colors(), w, mu, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kcolor::graphgen::build_pebble_graph(pumped, w));
  }
}
BENCHMARK(BM_BuildPebbleGraph)->Arg(20)->Arg(40);

void BM_Congen(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const Workspace w = bench_workspace();
  SplitRng rng_a(6);
  SplitRng rng_b(7);
  const auto pumped_a = kcolor::graphgen::sample_pumped(bench_colors(), w, 20, rng_a);
  const auto pumped_b = kcolor::graphgen::sample_pumped(bench_colors(), w, 20, rng_b);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    SplitRng rng(seed++);
    benchmark::DoNotOptimize(kcolor::congen::congen(pumped_a, pumped_b, q, w, rng));
  }
}
BENCHMARK(BM_Congen)->Arg(16)->Arg(64);

kcolor::Scenario bench_scenario() {
  kcolor::Scenario sc;
  sc.name = "bench";
  sc.workspace = bench_workspace();
  sc.groups.push_back({0.6, {{2, 2}, {2, 5}, {2, 8}}, {{18, 18}, {18, 15}, {18, 12}}});
  sc.groups.push_back({0.4, {{18, 2}, {18, 5}}, {{2, 18}, {2, 15}}});
  return sc;
}

void BM_Preprocess(benchmark::State& state) {
  const kcolor::Scenario sc = bench_scenario();
  kcolor::PlannerParams params;
  params.g = static_cast<int>(state.range(0));
  params.q = 30;
  params.mu = 15;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kcolor::roadmap::preprocess(sc, params));
  }
}
BENCHMARK(BM_Preprocess)->Arg(2)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Query(benchmark::State& state) {
  const kcolor::Scenario sc = bench_scenario();
  kcolor::PlannerParams params;
  params.g = 6;
  params.q = 30;
  params.mu = 15;
  const auto planner_state = kcolor::roadmap::preprocess(sc, params);
  std::vector<std::vector<Point>> starts;
  std::vector<std::vector<Point>> targets;
  for (const auto& group : sc.groups) {
    starts.push_back(group.starts);
    targets.push_back(group.targets);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(kcolor::roadmap::query(planner_state, starts, targets, 30));
  }
  state.SetLabel("nodes=" + std::to_string(planner_state.roadmap.node_count()));
}
BENCHMARK(BM_Query)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
