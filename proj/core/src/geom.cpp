#include "kcolor/geom.hpp"

#include <algorithm>

#include "kcolor/errors.hpp"

namespace kcolor::geom {

namespace {

int orientation_sign(Point a, Point b, Point c) {
  const double v = cross(b - a, c - a);
  return (v > 0.0) - (v < 0.0);
}

// p assumed collinear with [a, b].
bool on_segment(Point a, Point b, Point p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

double shoelace_sum(const std::vector<Point>& v) {
  double s = 0.0;
  for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
    s += cross(v[j], v[i]);
  }
  return s;
}

}  // namespace

Polygon::Polygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) {
    throw ValidationError("polygon_too_few_vertices",
                          "polygon needs at least 3 vertices, got " +
                              std::to_string(vertices_.size()));
  }
  for (const Point& p : vertices_) {
    if (!is_finite(p)) {
      throw ValidationError("coordinate_not_finite", "polygon vertex is not finite");
    }
  }
  for (std::size_t i = 0, j = vertices_.size() - 1; i < vertices_.size(); j = i++) {
    if (vertices_[i] == vertices_[j]) {
      throw ValidationError("polygon_repeated_vertex",
                            "consecutive polygon vertices coincide at index " +
                                std::to_string(i));
    }
  }
  if (shoelace_sum(vertices_) < 0.0) {
    std::reverse(vertices_.begin(), vertices_.end());
  }
}

double Polygon::area() const { return 0.5 * shoelace_sum(vertices_); }

bool Polygon::is_simple() const {
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto [a1, b1] = edge(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      const auto [a2, b2] = edge(j);
      if (segments_intersect(a1, b1, a2, b2)) return false;
    }
  }
  // Adjacent edges may only share their common endpoint; a collinear
  // back-track (spike) makes the polygon non-simple.
  for (std::size_t i = 0; i < n; ++i) {
    const Point u = vertices_[i];
    const Point v = vertices_[(i + 1) % n];
    const Point w = vertices_[(i + 2) % n];
    if (orientation_sign(u, v, w) == 0 && dot(u - v, w - v) > 0.0) return false;
  }
  return true;
}

Workspace::Box Workspace::bounding_box() const {
  Box box{boundary.vertices().front(), boundary.vertices().front()};
  for (const Point& p : boundary.vertices()) {
    box.lo.x = std::min(box.lo.x, p.x);
    box.lo.y = std::min(box.lo.y, p.y);
    box.hi.x = std::max(box.hi.x, p.x);
    box.hi.y = std::max(box.hi.y, p.y);
  }
  return box;
}

double dist_point_segment(Point p, Point a, Point b) {
  const Point ab = b - a;
  const double len_sq = norm_sq(ab);
  if (len_sq == 0.0) return distance(p, a);
  const double u = std::clamp(dot(p - a, ab) / len_sq, 0.0, 1.0);
  return distance(p, a + u * ab);
}

bool segments_intersect(Point a1, Point b1, Point a2, Point b2) {
  const int o1 = orientation_sign(a1, b1, a2);
  const int o2 = orientation_sign(a1, b1, b2);
  const int o3 = orientation_sign(a2, b2, a1);
  const int o4 = orientation_sign(a2, b2, b1);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a1, b1, a2)) return true;
  if (o2 == 0 && on_segment(a1, b1, b2)) return true;
  if (o3 == 0 && on_segment(a2, b2, a1)) return true;
  if (o4 == 0 && on_segment(a2, b2, b1)) return true;
  return false;
}

double dist_segment_segment(Point a1, Point b1, Point a2, Point b2) {
  if (segments_intersect(a1, b1, a2, b2)) return 0.0;
  double d = dist_point_segment(a1, a2, b2);
  d = std::min(d, dist_point_segment(b1, a2, b2));
  d = std::min(d, dist_point_segment(a2, a1, b1));
  d = std::min(d, dist_point_segment(b2, a1, b1));
  return d;
}

bool point_in_polygon(Point p, const Polygon& poly) {
  const auto& v = poly.vertices();
  bool inside = false;
  for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
    // Half-open rule: an edge covers [min(y), max(y)) of its span, so a ray
    // through a vertex is counted exactly once.
    if ((v[i].y > p.y) == (v[j].y > p.y)) continue;
    const double x_at =
        v[j].x + (p.y - v[j].y) * (v[i].x - v[j].x) / (v[i].y - v[j].y);
    if (p.x < x_at) inside = !inside;
  }
  return inside;
}

bool disc_free(Point c, double r, const Workspace& w) {
  if (!point_in_polygon(c, w.boundary)) return false;
  const auto& bv = w.boundary.vertices();
  for (std::size_t i = 0, j = bv.size() - 1; i < bv.size(); j = i++) {
    if (dist_point_segment(c, bv[j], bv[i]) < r) return false;
  }
  for (const Polygon& obs : w.obstacles) {
    if (point_in_polygon(c, obs)) return false;
    const auto& ov = obs.vertices();
    for (std::size_t i = 0, j = ov.size() - 1; i < ov.size(); j = i++) {
      if (dist_point_segment(c, ov[j], ov[i]) < r) return false;
    }
  }
  return true;
}

bool sweep_free(const LinearMotion& m, double r, const Workspace& w) {
  if (!disc_free(m.from, r, w) || !disc_free(m.to, r, w)) return false;
  if (m.from == m.to) return true;
  // Endpoints free and the capsule clear of every polygon edge imply the
  // whole sweep stays inside the free space, including for a non-convex
  // boundary: leaving it would cross a boundary edge.
  const auto& bv = w.boundary.vertices();
  for (std::size_t i = 0, j = bv.size() - 1; i < bv.size(); j = i++) {
    if (dist_segment_segment(m.from, m.to, bv[j], bv[i]) < r) return false;
  }
  for (const Polygon& obs : w.obstacles) {
    const auto& ov = obs.vertices();
    for (std::size_t i = 0, j = ov.size() - 1; i < ov.size(); j = i++) {
      if (dist_segment_segment(m.from, m.to, ov[j], ov[i]) < r) return false;
    }
  }
  return true;
}

double min_dist_linear_motions(const LinearMotion& a, const LinearMotion& b) {
  const Point d0 = a.from - b.from;
  const Point dv = a.delta() - b.delta();
  const double dv_sq = norm_sq(dv);
  double theta = 0.0;
  if (dv_sq > 0.0) theta = std::clamp(-dot(d0, dv) / dv_sq, 0.0, 1.0);
  return norm(d0 + theta * dv);
}

}  // namespace kcolor::geom
