#pragma once

// Reference computations written independently of the library, for use as
// test oracles. They work directly on GMP rationals or raw doubles.

#include <gmpxx.h>

#include <array>
#include <cmath>
#include <utility>

namespace oracle {

using Q = mpq_class;
using QPoint = std::pair<Q, Q>;

/// Meet of y - y1 = m1 (x - x1) and y - y2 = m2 (x - x2) by Cramer's rule.
inline QPoint meet(const QPoint& p1, const Q& m1, const QPoint& p2, const Q& m2) {
  // m1 x - y = m1 x1 - y1 ; m2 x - y = m2 x2 - y2
  const Q r1 = m1 * p1.first - p1.second;
  const Q r2 = m2 * p2.first - p2.second;
  const Q det = -m1 + m2;
  const Q x = (-r1 + r2) / det;
  const Q y = (m1 * r2 - m2 * r1) / det;
  return {x, y};
}

struct DPoint {
  double x;
  double y;
};

/// Points on a circle of diameter d centered at the origin at the given
/// absolute angles.
inline std::array<DPoint, 4> circle_points(double d, const std::array<double, 4>& angles) {
  std::array<DPoint, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) out[i] = {d / 2.0 * std::cos(angles[i]), d / 2.0 * std::sin(angles[i])};
  return out;
}

/// Interior angle at b of the polyline a-b-c.
inline double angle_at(DPoint a, DPoint b, DPoint c) {
  const double ux = a.x - b.x, uy = a.y - b.y, vx = c.x - b.x, vy = c.y - b.y;
  return std::atan2(std::abs(ux * vy - uy * vx), ux * vx + uy * vy);
}

/// Reflection of p across the perpendicular bisector of segment ab.
inline DPoint reflect_across_bisector(DPoint p, DPoint a, DPoint b) {
  const double mx = (a.x + b.x) / 2.0, my = (a.y + b.y) / 2.0;
  double nx = b.x - a.x, ny = b.y - a.y;
  const double n = std::hypot(nx, ny);
  nx /= n;
  ny /= n;
  const double k = (p.x - mx) * nx + (p.y - my) * ny;
  return {p.x - 2.0 * k * nx, p.y - 2.0 * k * ny};
}

inline double dist(DPoint a, DPoint b) { return std::hypot(a.x - b.x, a.y - b.y); }

inline double shoelace(const std::array<DPoint, 4>& p) {
  double s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) s += p[i].x * p[(i + 1) % 4].y - p[(i + 1) % 4].x * p[i].y;
  return s / 2.0;
}

}  // namespace oracle
