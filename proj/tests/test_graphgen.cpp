#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "kcolor/errors.hpp"
#include "kcolor/graphgen.hpp"
#include "kcolor/rng.hpp"

using namespace kcolor;
using geom::Point;
using geom::Polygon;
using geom::Workspace;

namespace {

Workspace open_box(double w, double h) {
  Workspace ws;
  ws.boundary = Polygon({{0, 0}, {w, 0}, {w, h}, {0, h}});
  return ws;
}

Workspace walled_box() {
  // 10 x 10 box split by a full-height wall at x in [4.75, 5.25]
  Workspace ws = open_box(10, 10);
  ws.obstacles.push_back(Polygon({{4.75, 0}, {5.25, 0}, {5.25, 10}, {4.75, 10}}));
  return ws;
}

}  // namespace

TEST_SUITE_BEGIN("graphgen");

TEST_CASE("split rng streams are independent of consumption order") {
  SplitRng root(42);
  SplitRng a = root.stream("sample", 3);
  // consuming the parent must not change what a child stream produces
  root.next_u64();
  root.next_u64();
  SplitRng b = root.stream("sample", 3);
  for (int i = 0; i < 16; ++i) CHECK(a.next_u64() == b.next_u64());

  // distinct labels and indices give distinct streams
  SplitRng c = root.stream("sample", 4);
  SplitRng d = root.stream("congen", 3);
  CHECK(c.next_u64() != a.next_u64());
  CHECK(d.next_u64() != b.next_u64());
}

TEST_CASE("split rng draws stay in range") {
  SplitRng rng(7);
  for (int i = 0; i < 1000; ++i) {
    const double x = rng.next_double();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
    const auto n = rng.next_below(13);
    CHECK(n < 13);
    const double y = rng.next_in(-2.0, 3.0);
    CHECK(y >= -2.0);
    CHECK(y < 3.0);
  }
  CHECK(rng.next_below(0) == 0);
  CHECK(rng.next_below(1) == 0);
}

TEST_CASE("color_specs mirrors the scenario groups") {
  Scenario sc;
  sc.workspace = open_box(10, 10);
  sc.groups.push_back({0.5, {{1, 1}, {2, 2}}, {{8, 8}, {7, 7}}});
  sc.groups.push_back({0.25, {{5, 5}}, {{5, 8}}});
  const auto specs = graphgen::color_specs(sc);
  REQUIRE(specs.size() == 2);
  CHECK(specs[0].color_id == 0);
  CHECK(specs[0].radius == 0.5);
  CHECK(specs[0].robot_count == 2);
  CHECK(specs[1].color_id == 1);
  CHECK(specs[1].robot_count == 1);
}

TEST_CASE("allocate_quotas splits proportionally with largest remainder") {
  using graphgen::ColorSpec;
  CHECK(graphgen::allocate_quotas({{0, 1, 2}, {1, 1, 1}}, 6) == std::vector<int>{4, 2});
  // equal remainders: earlier colors win the leftovers
  CHECK(graphgen::allocate_quotas({{0, 1, 1}, {1, 1, 1}, {2, 1, 1}}, 5) ==
        std::vector<int>{2, 2, 1});
  CHECK(graphgen::allocate_quotas({{0, 1, 3}, {1, 1, 1}}, 5) == std::vector<int>{4, 1});
  CHECK(graphgen::allocate_quotas({{0, 1, 1}, {1, 1, 2}}, 4) == std::vector<int>{1, 3});
  // no slack: quotas equal robot counts
  CHECK(graphgen::allocate_quotas({{0, 1, 2}, {1, 1, 3}}, 5) == std::vector<int>{2, 3});
  CHECK(graphgen::allocate_quotas({{0, 1, 2}, {1, 1, 3}}, 7) == std::vector<int>{3, 4});

  CHECK_THROWS_AS(graphgen::allocate_quotas({}, 5), ValidationError);
  CHECK_THROWS_AS(graphgen::allocate_quotas({{0, 1, 3}}, 2), ValidationError);
}

TEST_CASE("allocate_quotas invariants on random inputs") {
  SplitRng rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    const int k = 1 + static_cast<int>(rng.next_below(5));
    std::vector<graphgen::ColorSpec> colors;
    int total = 0;
    for (int i = 0; i < k; ++i) {
      const int m = 1 + static_cast<int>(rng.next_below(6));
      colors.push_back({i, 1.0, m});
      total += m;
    }
    const int mu = total + static_cast<int>(rng.next_below(40));
    const auto quota = graphgen::allocate_quotas(colors, mu);
    CHECK(std::accumulate(quota.begin(), quota.end(), 0) == mu);
    for (int i = 0; i < k; ++i) {
      CHECK(quota[i] >= colors[i].robot_count);
      // proportional within one point of the exact share
      const double share = static_cast<double>(mu) * colors[i].robot_count / total;
      CHECK(quota[i] >= static_cast<int>(share) - 1);
      CHECK(quota[i] <= static_cast<int>(share) + 1);
    }
  }
}

TEST_CASE("sample_pumped fills quotas with pairwise-safe points") {
  const Workspace w = open_box(10, 10);
  const std::vector<graphgen::ColorSpec> colors{{0, 0.6, 2}, {1, 0.4, 2}};
  SplitRng rng(123);
  const auto pumped = graphgen::sample_pumped(colors, w, 12, rng);

  const auto quota = graphgen::allocate_quotas(colors, 12);
  REQUIRE(pumped.color_count() == 2);
  CHECK(pumped.total_points() == 12);
  CHECK(pumped.per_color[0].size() == quota[0]);
  CHECK(pumped.per_color[1].size() == quota[1]);

  for (int i = 0; i < pumped.color_count(); ++i) {
    const auto& pc = pumped.per_color[i];
    CHECK(pc.color_id == colors[i].color_id);
    CHECK(pc.radius == colors[i].radius);
    for (const Point& p : pc.points) CHECK(geom::disc_free(p, pc.radius, w));
    for (int j = i; j < pumped.color_count(); ++j) {
      const auto& qc = pumped.per_color[j];
      const double need = pc.radius + qc.radius;
      for (std::size_t a = 0; a < pc.points.size(); ++a) {
        for (std::size_t b = (i == j ? a + 1 : 0); b < qc.points.size(); ++b) {
          CHECK(geom::distance(pc.points[a], qc.points[b]) >= need);
        }
      }
    }
  }
}

TEST_CASE("sample_pumped is deterministic in the seed") {
  const Workspace w = open_box(12, 8);
  const std::vector<graphgen::ColorSpec> colors{{0, 0.5, 3}, {1, 0.3, 2}};
  SplitRng r1(9), r2(9), r3(10);
  const auto a = graphgen::sample_pumped(colors, w, 9, r1);
  const auto b = graphgen::sample_pumped(colors, w, 9, r2);
  const auto c = graphgen::sample_pumped(colors, w, 9, r3);
  REQUIRE(a.color_count() == b.color_count());
  for (int i = 0; i < a.color_count(); ++i) {
    CHECK(a.per_color[i].points == b.per_color[i].points);
  }
  bool other_seed_matches = true;
  for (int i = 0; i < a.color_count(); ++i) {
    other_seed_matches = other_seed_matches && a.per_color[i].points == c.per_color[i].points;
  }
  CHECK_FALSE(other_seed_matches);
}

TEST_CASE("sample_pumped reports exhaustion when the space is too tight") {
  const Workspace w = open_box(1, 1);
  const std::vector<graphgen::ColorSpec> colors{{0, 10.0, 1}};
  SplitRng rng(1);
  CHECK_THROWS_AS(graphgen::sample_pumped(colors, w, 1, rng, 500), SamplingExhaustedError);

  SplitRng rng2(1);
  CHECK_THROWS_AS(graphgen::sample_pumped({{0, 0.2, 1}}, w, 0, rng2), ValidationError);
}

TEST_CASE("edge_plan certifies straight motions and respects blockers") {
  const Workspace w = open_box(10, 10);
  graphgen::CompositePumpedConfiguration pumped;
  pumped.per_color.push_back({0, 0.5, 1, {{2, 5}, {8, 5}}});
  pumped.per_color.push_back({1, 0.5, 1, {{5, 8}}});

  SUBCASE("clear corridor") {
    const auto m = graphgen::edge_plan(pumped, 0, 0, 1, w);
    REQUIRE(m.has_value());
    CHECK(m->from == Point{2, 5});
    CHECK(m->to == Point{8, 5});
  }
  SUBCASE("blocked by a parked disc of another color") {
    pumped.per_color[1].points[0] = {5, 5.5};  // 0.5 from the segment, needs 1.0
    CHECK_FALSE(graphgen::edge_plan(pumped, 0, 0, 1, w).has_value());
  }
  SUBCASE("blocker exactly at the collision bound is rejected by the margin") {
    pumped.per_color[1].points[0] = {5, 6.0};  // distance 1.0 == sum of radii
    CHECK_FALSE(graphgen::edge_plan(pumped, 0, 0, 1, w).has_value());
    pumped.per_color[1].points[0] = {5, 6.0 + 1e-6};  // comfortably past the margin
    CHECK(graphgen::edge_plan(pumped, 0, 0, 1, w).has_value());
  }
  SUBCASE("blocked by an obstacle") {
    Workspace w2 = walled_box();
    CHECK_FALSE(graphgen::edge_plan(pumped, 0, 0, 1, w2).has_value());
  }
  SUBCASE("own endpoints do not block") {
    const auto m = graphgen::edge_plan(pumped, 0, 1, 0, w);
    REQUIRE(m.has_value());
    CHECK(m->from == Point{8, 5});
  }
  SUBCASE("degenerate requests are internal errors") {
    CHECK_THROWS_AS(graphgen::edge_plan(pumped, 0, 0, 0, w), InternalError);
    CHECK_THROWS_AS(graphgen::edge_plan(pumped, 0, 0, 7, w), InternalError);
  }
}

TEST_CASE("build_pebble_graph produces per-color graphs with certified edges") {
  SUBCASE("empty box gives complete graphs") {
    const Workspace w = open_box(20, 20);
    graphgen::CompositePumpedConfiguration pumped;
    pumped.per_color.push_back({0, 0.5, 2, {{2, 2}, {10, 8}, {18, 2}}});
    const auto g = graphgen::build_pebble_graph(pumped, w);
    REQUIRE(g.graphs.size() == 1);
    CHECK(g.graphs[0].edges().size() == 3);
    CHECK(g.graphs[0].component_count() == 1);
  }
  SUBCASE("a wall splits the graph into components") {
    const Workspace w = walled_box();
    graphgen::CompositePumpedConfiguration pumped;
    pumped.per_color.push_back({0, 0.5, 2, {{2, 2}, {2, 8}, {8, 2}, {8, 8}}});
    const auto g = graphgen::build_pebble_graph(pumped, w);
    CHECK(g.graphs[0].has_edge(0, 1));
    CHECK(g.graphs[0].has_edge(2, 3));
    CHECK_FALSE(g.graphs[0].has_edge(0, 2));
    CHECK_FALSE(g.graphs[0].has_edge(1, 3));
    CHECK(g.graphs[0].component_count() == 2);
    CHECK(g.graphs[0].component_of(0) == g.graphs[0].component_of(1));
  }
  SUBCASE("a parked point of another color can sever an edge") {
    const Workspace w = open_box(10, 10);
    graphgen::CompositePumpedConfiguration pumped;
    pumped.per_color.push_back({0, 0.5, 1, {{2, 2}, {2, 8}}});
    pumped.per_color.push_back({1, 0.5, 1, {{2, 5}}});
    const auto g = graphgen::build_pebble_graph(pumped, w);
    CHECK(g.graphs[0].edges().empty());
    CHECK(g.graphs[1].edges().empty());  // single vertex
  }
}

TEST_CASE("edge_motion returns the certified segment or throws") {
  const Workspace w = open_box(10, 10);
  graphgen::CompositePumpedConfiguration pumped;
  pumped.per_color.push_back({0, 0.5, 1, {{2, 2}, {8, 8}, {2, 8}}});
  const auto g = graphgen::build_pebble_graph(pumped, w);
  const auto m = g.edge_motion(0, 0, 1);
  CHECK(m.from == Point{2, 2});
  CHECK(m.to == Point{8, 8});
  CHECK(g.edge_motion(0, 1, 0).from == Point{8, 8});

  graphgen::GeometricPebbleGraph split{pumped, {pebble::Graph(3, {{0, 1}})}};
  CHECK_THROWS_AS(split.edge_motion(0, 1, 2), InternalError);
}

TEST_CASE("certified edges survive a raw safety audit") {
  const Workspace w = walled_box();
  const std::vector<graphgen::ColorSpec> colors{{0, 0.45, 2}, {1, 0.35, 2}};
  SplitRng rng(2718);
  const auto pumped = graphgen::sample_pumped(colors, w, 14, rng);
  const auto g = graphgen::build_pebble_graph(pumped, w);

  int audited = 0;
  for (int c = 0; c < pumped.color_count(); ++c) {
    const double r = pumped.per_color[c].radius;
    for (const auto& [u, v] : g.graphs[c].edges()) {
      const geom::LinearMotion m = g.edge_motion(c, u, v);
      CHECK(geom::sweep_free(m, r, w));
      for (int j = 0; j < pumped.color_count(); ++j) {
        const auto& other = pumped.per_color[j];
        for (int t = 0; t < other.size(); ++t) {
          if (j == c && (t == u || t == v)) continue;
          CHECK(geom::dist_point_segment(other.points[t], m.from, m.to) >=
                r + other.radius);
        }
      }
      ++audited;
    }
  }
  CHECK(audited > 0);
}

TEST_SUITE_END();
