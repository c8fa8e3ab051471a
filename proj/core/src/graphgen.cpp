#include "kcolor/graphgen.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "kcolor/errors.hpp"

namespace kcolor::graphgen {

std::vector<ColorSpec> color_specs(const Scenario& sc) {
  std::vector<ColorSpec> specs;
  specs.reserve(sc.groups.size());
  for (int i = 0; i < sc.color_count(); ++i) {
    specs.push_back({i, sc.groups[i].radius, sc.groups[i].robot_count()});
  }
  return specs;
}

std::vector<int> allocate_quotas(const std::vector<ColorSpec>& colors, int mu) {
  int total_robots = 0;
  for (const auto& c : colors) total_robots += c.robot_count;
  if (colors.empty()) throw ValidationError("no_colors", "quota split needs colors");
  if (mu < total_robots) {
    throw ValidationError("mu_too_small",
                          "point budget " + std::to_string(mu) + " below robot count " +
                              std::to_string(total_robots));
  }

  std::vector<int> quota(colors.size(), 0);
  std::vector<std::pair<long long, int>> remainder;  // (-rem, color) for stable sort
  long long assigned = 0;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    const long long num = static_cast<long long>(mu) * colors[i].robot_count;
    quota[i] = static_cast<int>(num / total_robots);
    assigned += quota[i];
    remainder.emplace_back(-(num % total_robots), static_cast<int>(i));
  }
  std::sort(remainder.begin(), remainder.end());
  const long long leftover = mu - assigned;
  for (long long i = 0; i < leftover; ++i) ++quota[remainder[i].second];
  return quota;
}

CompositePumpedConfiguration sample_pumped(const std::vector<ColorSpec>& colors,
                                           const geom::Workspace& w, int mu,
                                           SplitRng& rng, int max_tries) {
  const std::vector<int> quota = allocate_quotas(colors, mu);
  const auto box = w.bounding_box();

  CompositePumpedConfiguration out;
  out.per_color.reserve(colors.size());
  for (const auto& c : colors) {
    out.per_color.push_back({c.color_id, c.radius, c.robot_count, {}});
  }

  int draws = 0;
  int unfilled = static_cast<int>(colors.size());
  while (unfilled > 0 && draws < max_tries) {
    // Round-robin over colors that still need points, one draw each pass,
    // so no color starves the shared budget.
    for (std::size_t i = 0; i < colors.size() && draws < max_tries; ++i) {
      auto& pc = out.per_color[i];
      if (pc.size() >= quota[i]) continue;
      ++draws;
      const geom::Point p{rng.next_in(box.lo.x, box.hi.x), rng.next_in(box.lo.y, box.hi.y)};
      if (!geom::disc_free(p, pc.radius + geom::kSafetyMargin, w)) continue;
      bool clear = true;
      for (const auto& other : out.per_color) {
        const double need = pc.radius + other.radius + geom::kSafetyMargin;
        for (const geom::Point& q : other.points) {
          if (geom::distance(p, q) < need) {
            clear = false;
            break;
          }
        }
        if (!clear) break;
      }
      if (!clear) continue;
      pc.points.push_back(p);
      if (pc.size() == quota[i]) --unfilled;
    }
  }

  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (out.per_color[i].size() < colors[i].robot_count) {
      throw SamplingExhaustedError("color " + std::to_string(colors[i].color_id) +
                                   " kept " + std::to_string(out.per_color[i].size()) +
                                   " of " + std::to_string(colors[i].robot_count) +
                                   " required points after " + std::to_string(draws) +
                                   " draws");
    }
  }
  return out;
}

std::optional<geom::LinearMotion> edge_plan(const CompositePumpedConfiguration& pumped,
                                            int color, int v0, int v1,
                                            const geom::Workspace& w) {
  const auto& mine = pumped.per_color[color];
  if (v0 == v1 || v0 < 0 || v1 < 0 || v0 >= mine.size() || v1 >= mine.size()) {
    throw InternalError("edge_plan needs two distinct pumped points");
  }
  const geom::LinearMotion m{mine.points[v0], mine.points[v1]};
  const double r = mine.radius;
  if (!geom::sweep_free(m, r + geom::kSafetyMargin, w)) return std::nullopt;
  for (int j = 0; j < pumped.color_count(); ++j) {
    const auto& other = pumped.per_color[j];
    const double need = r + other.radius + geom::kSafetyMargin;
    for (int u = 0; u < other.size(); ++u) {
      if (j == color && (u == v0 || u == v1)) continue;
      if (geom::dist_point_segment(other.points[u], m.from, m.to) < need) {
        return std::nullopt;
      }
    }
  }
  return m;
}

geom::LinearMotion GeometricPebbleGraph::edge_motion(int color, int u, int v) const {
  if (!graphs[color].has_edge(u, v)) {
    throw InternalError("no certified edge (" + std::to_string(u) + ", " +
                        std::to_string(v) + ") for color " + std::to_string(color));
  }
  return {pumped.per_color[color].points[u], pumped.per_color[color].points[v]};
}

GeometricPebbleGraph build_pebble_graph(const CompositePumpedConfiguration& pumped,
                                        const geom::Workspace& w) {
  GeometricPebbleGraph g{pumped, {}};
  g.graphs.reserve(pumped.per_color.size());
  for (int i = 0; i < pumped.color_count(); ++i) {
    const int n = pumped.per_color[i].size();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (edge_plan(pumped, i, u, v, w)) edges.emplace_back(u, v);
      }
    }
    g.graphs.emplace_back(n, std::move(edges));
  }
  return g;
}

}  // namespace kcolor::graphgen
