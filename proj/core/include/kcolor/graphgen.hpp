#pragma once

#include <optional>
#include <vector>

#include "kcolor/geom.hpp"
#include "kcolor/pebble.hpp"
#include "kcolor/rng.hpp"
#include "kcolor/scenario.hpp"

namespace kcolor::graphgen {

struct ColorSpec {
  int color_id = 0;
  double radius = 0.0;
  int robot_count = 0;
};

std::vector<ColorSpec> color_specs(const Scenario& sc);

// Pumped point set for one color: at least robot_count points, pairwise
// compatible with every other color's points, so any robot_count-subset is
// a collision-free configuration.
struct PumpedConfiguration {
  int color_id = 0;
  double radius = 0.0;
  int robot_count = 0;
  std::vector<geom::Point> points;

  int size() const { return static_cast<int>(points.size()); }
};

struct CompositePumpedConfiguration {
  std::vector<PumpedConfiguration> per_color;

  int color_count() const { return static_cast<int>(per_color.size()); }
  int total_points() const {
    int n = 0;
    for (const auto& c : per_color) n += c.size();
    return n;
  }
};

// Splits a total budget of mu points across colors proportionally to robot
// counts, by largest remainder with ties broken by color id. Each color
// gets at least its robot count whenever mu >= total robots.
std::vector<int> allocate_quotas(const std::vector<ColorSpec>& colors, int mu);

// Rejection-samples points uniformly in the workspace bounding box until
// every color reaches its quota, under one global budget of max_tries
// draws. Kept points clear obstacles and all previously kept points of
// every color by the sum of radii. Throws SamplingExhaustedError if any
// color is below its robot count when the budget runs out.
CompositePumpedConfiguration sample_pumped(const std::vector<ColorSpec>& colors,
                                           const geom::Workspace& w, int mu,
                                           SplitRng& rng, int max_tries = 100000);

// Straight-line local planner for one robot of `color` moving from point
// v0 to point v1 of its pumped set while all other pumped points of every
// color stand still. Returns the motion, or nullopt if blocked.
std::optional<geom::LinearMotion> edge_plan(const CompositePumpedConfiguration& pumped,
                                            int color, int v0, int v1,
                                            const geom::Workspace& w);

// Per-color graph over pumped points whose edges are exactly the motions
// certified by edge_plan; components are cached inside pebble::Graph.
struct GeometricPebbleGraph {
  CompositePumpedConfiguration pumped;
  std::vector<pebble::Graph> graphs;

  geom::LinearMotion edge_motion(int color, int u, int v) const;
};

GeometricPebbleGraph build_pebble_graph(const CompositePumpedConfiguration& pumped,
                                        const geom::Workspace& w);

}  // namespace kcolor::graphgen
