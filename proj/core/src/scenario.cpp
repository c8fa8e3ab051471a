#include "kcolor/scenario.hpp"

#include <string>

#include "kcolor/errors.hpp"

namespace kcolor {

namespace {

void validate_workspace(const geom::Workspace& w) {
  if (!w.boundary.is_simple()) {
    throw ValidationError("boundary_not_simple", "workspace boundary self-intersects");
  }
  for (std::size_t oi = 0; oi < w.obstacles.size(); ++oi) {
    const geom::Polygon& obs = w.obstacles[oi];
    if (!obs.is_simple()) {
      throw ValidationError("obstacle_not_simple",
                            "obstacle " + std::to_string(oi) + " self-intersects");
    }
    for (const geom::Point& p : obs.vertices()) {
      if (!geom::point_in_polygon(p, w.boundary)) {
        throw ValidationError("obstacle_outside_boundary",
                              "obstacle " + std::to_string(oi) + " leaves the boundary");
      }
    }
    for (std::size_t i = 0; i < obs.size(); ++i) {
      const auto [a, b] = obs.edge(i);
      for (std::size_t j = 0; j < w.boundary.size(); ++j) {
        const auto [c, d] = w.boundary.edge(j);
        if (geom::segments_intersect(a, b, c, d)) {
          throw ValidationError("obstacle_outside_boundary",
                                "obstacle " + std::to_string(oi) + " touches the boundary");
        }
      }
    }
  }
  for (std::size_t oi = 0; oi < w.obstacles.size(); ++oi) {
    for (std::size_t oj = oi + 1; oj < w.obstacles.size(); ++oj) {
      const geom::Polygon& a = w.obstacles[oi];
      const geom::Polygon& b = w.obstacles[oj];
      bool overlap = geom::point_in_polygon(a.vertices().front(), b) ||
                     geom::point_in_polygon(b.vertices().front(), a);
      for (std::size_t i = 0; i < a.size() && !overlap; ++i) {
        const auto [p, q] = a.edge(i);
        for (std::size_t j = 0; j < b.size() && !overlap; ++j) {
          const auto [r, s] = b.edge(j);
          overlap = geom::segments_intersect(p, q, r, s);
        }
      }
      if (overlap) {
        throw ValidationError("obstacles_overlap", "obstacles " + std::to_string(oi) +
                                                       " and " + std::to_string(oj) +
                                                       " are not disjoint");
      }
    }
  }
}

}  // namespace

void validate_scenario(const Scenario& sc) {
  validate_workspace(sc.workspace);
  if (sc.groups.empty()) {
    throw ValidationError("no_colors", "scenario has no color groups");
  }
  for (int i = 0; i < sc.color_count(); ++i) {
    const ColorGroup& g = sc.groups[i];
    if (!(g.radius > 0.0) || !std::isfinite(g.radius)) {
      throw ValidationError("radius_not_positive",
                            "color " + std::to_string(i) + " has radius " +
                                std::to_string(g.radius));
    }
    if (g.starts.empty()) {
      throw ValidationError("color_empty", "color " + std::to_string(i) + " has no robots");
    }
    if (g.targets.size() != g.starts.size()) {
      throw ValidationError("count_mismatch",
                            "color " + std::to_string(i) + " has " +
                                std::to_string(g.starts.size()) + " starts but " +
                                std::to_string(g.targets.size()) + " targets");
    }
    for (const geom::Point& p : g.starts) {
      if (!geom::is_finite(p)) {
        throw ValidationError("coordinate_not_finite",
                              "start of color " + std::to_string(i) + " is not finite");
      }
    }
    for (const geom::Point& p : g.targets) {
      if (!geom::is_finite(p)) {
        throw ValidationError("coordinate_not_finite",
                              "target of color " + std::to_string(i) + " is not finite");
      }
    }
  }
  for (int i = 0; i < sc.color_count(); ++i) {
    const ColorGroup& g = sc.groups[i];
    for (std::size_t j = 0; j < g.starts.size(); ++j) {
      if (!geom::disc_free(g.starts[j], g.radius, sc.workspace)) {
        throw ValidationError("start_not_free", "start " + std::to_string(j) +
                                                    " of color " + std::to_string(i) +
                                                    " collides with the workspace");
      }
      if (!geom::disc_free(g.targets[j], g.radius, sc.workspace)) {
        throw ValidationError("target_not_free", "target " + std::to_string(j) +
                                                     " of color " + std::to_string(i) +
                                                     " collides with the workspace");
      }
    }
  }
  auto check_overlap = [&](auto pick, const char* code, const char* what) {
    for (int i = 0; i < sc.color_count(); ++i) {
      for (std::size_t a = 0; a < pick(i).size(); ++a) {
        for (int j = i; j < sc.color_count(); ++j) {
          for (std::size_t b = (i == j ? a + 1 : 0); b < pick(j).size(); ++b) {
            const double need = sc.groups[i].radius + sc.groups[j].radius;
            if (geom::distance(pick(i)[a], pick(j)[b]) < need) {
              throw ValidationError(code, std::string(what) + " of colors " +
                                              std::to_string(i) + " and " +
                                              std::to_string(j) + " overlap");
            }
          }
        }
      }
    }
  };
  check_overlap([&](int i) -> const std::vector<geom::Point>& { return sc.groups[i].starts; },
                "start_overlap", "start positions");
  check_overlap([&](int i) -> const std::vector<geom::Point>& { return sc.groups[i].targets; },
                "target_overlap", "target positions");
}

}  // namespace kcolor
