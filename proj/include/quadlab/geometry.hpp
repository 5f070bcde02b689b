#pragma once

#include <array>
#include <span>
#include <vector>

#include "quadlab/scalar.hpp"
#include "quadlab/tolerances.hpp"

namespace quadlab {

struct Point2 {
  Scalar x;
  Scalar y;

  Mode mode() const { return x.mode(); }
  friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 operator+(const Point2& p, const Point2& q) { return {p.x + q.x, p.y + q.y}; }
inline Point2 operator-(const Point2& p, const Point2& q) { return {p.x - q.x, p.y - q.y}; }
inline Point2 operator*(const Scalar& k, const Point2& p) { return {k * p.x, k * p.y}; }

inline Scalar dot(const Point2& p, const Point2& q) { return p.x * q.x + p.y * q.y; }
inline Scalar cross(const Point2& p, const Point2& q) { return p.x * q.y - p.y * q.x; }

/// Euclidean length, always approximate.
double length(const Point2& v);
double distance(const Point2& p, const Point2& q);

/// Rotation about the origin by `angle` radians (approximate points only).
Point2 rotate(const Point2& p, double angle);

/// A line through `anchor` with direction `direction`.
///
/// Approximate lines keep a unit direction. Exact lines keep the direction
/// as given; unit_direction() then needs a Pythagorean direction, i.e.
/// dx^2 + dy^2 must be the square of a rational.
class Line {
 public:
  /// Throws std::invalid_argument for a zero direction and ModeMismatch if
  /// anchor and direction disagree on mode.
  Line(Point2 anchor, Point2 direction);

  /// Line through `anchor` with slope dy/dx = `slope`.
  static Line with_slope(Point2 anchor, const Scalar& slope);

  const Point2& anchor() const { return anchor_; }
  const Point2& direction() const { return direction_; }
  Mode mode() const { return anchor_.mode(); }

  /// Direction scaled to unit length. Throws NonPythagorean in exact mode when
  /// the norm is irrational.
  Point2 unit_direction() const;

 private:
  Point2 anchor_;
  Point2 direction_;
};

/// Ordered vertex cycle of four points, no two consecutive ones equal.
class PlanarQuad {
 public:
  explicit PlanarQuad(std::array<Point2, 4> vertices);

  const std::array<Point2, 4>& vertices() const { return vertices_; }
  const Point2& operator[](std::size_t i) const { return vertices_[i]; }
  Mode mode() const { return vertices_[0].mode(); }

 private:
  std::array<Point2, 4> vertices_;
};

/// Intersection of two lines. Throws ParallelLines when the (normalized)
/// cross product of the directions is at or below `parallel_tol`
/// (approximate mode) or exactly zero (exact mode).
Point2 line_intersection(const Line& l1, const Line& l2, double parallel_tol = tol::kParallel);

/// (p - q) . u for points on a common line parallel to unit vector u.
Scalar signed_distance(const Point2& p, const Point2& q, const Point2& u);

/// Half the cyclic sum of x_i y_{i+1} - x_{i+1} y_i. Positive for a
/// counterclockwise convex traversal; winding-weighted in general.
Scalar signed_area(std::span<const Point2> poly);

/// True when every turn of the closed polygon has the same strict sign.
bool is_strictly_convex(std::span<const Point2> poly);

}  // namespace quadlab
