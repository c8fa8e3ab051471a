#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace kcolor::geom {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
inline bool operator!=(Point a, Point b) { return !(a == b); }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm_sq(Point p) { return dot(p, p); }
inline double norm(Point p) { return std::sqrt(norm_sq(p)); }
inline double distance(Point a, Point b) { return norm(a - b); }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Disc-center path parameterized over a shared clock theta in [0, 1].
// from == to models a disc that stays put for the whole interval.
struct LinearMotion {
  Point from;
  Point to;

  Point at(double theta) const {
    return {from.x + theta * (to.x - from.x), from.y + theta * (to.y - from.y)};
  }
  Point delta() const { return to - from; }
  double length() const { return distance(from, to); }
  LinearMotion reversed() const { return {to, from}; }
};

inline bool operator==(const LinearMotion& a, const LinearMotion& b) {
  return a.from == b.from && a.to == b.to;
}

// Simple polygon, stored counterclockwise. The constructor normalizes
// orientation and rejects degenerate vertex lists; simplicity is checked
// separately because it is quadratic and only needed at input validation.
class Polygon {
 public:
  Polygon() = default;
  explicit Polygon(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  std::pair<Point, Point> edge(std::size_t i) const {
    return {vertices_[i], vertices_[(i + 1) % vertices_.size()]};
  }
  double area() const;
  bool is_simple() const;

 private:
  std::vector<Point> vertices_;
};

struct Workspace {
  Polygon boundary;
  std::vector<Polygon> obstacles;

  struct Box {
    Point lo;
    Point hi;
  };
  Box bounding_box() const;
};

// Planner-side clearance slack: sampling, edge planning, and connection
// filtering demand this much margin beyond the bare collision bound, while
// the verifier checks the bare bound. Keeps the planner's accept set
// strictly inside the verifier's, so boundary-exact cases cannot flip.
inline constexpr double kSafetyMargin = 1e-7;

double dist_point_segment(Point p, Point a, Point b);
double dist_segment_segment(Point a1, Point b1, Point a2, Point b2);
bool segments_intersect(Point a1, Point b1, Point a2, Point b2);

// Even-odd ray casting with a half-open vertical rule, which acts as a
// deterministic perturbation when the ray would hit a vertex.
bool point_in_polygon(Point p, const Polygon& poly);

// Disc fully inside the boundary and outside every obstacle, allowing
// tangency: clearance exactly r counts as free.
bool disc_free(Point c, double r, const Workspace& w);

// Capsule swept by a disc of radius r along m stays free. Endpoints are
// checked as discs; the swept body is checked against every polygon edge.
bool sweep_free(const LinearMotion& m, double r, const Workspace& w);

// Minimum center distance of two discs moving on a shared clock. The
// squared distance is a convex quadratic in theta, so the minimum over
// [0, 1] is attained at the clamped stationary point.
double min_dist_linear_motions(const LinearMotion& a, const LinearMotion& b);

}  // namespace kcolor::geom
