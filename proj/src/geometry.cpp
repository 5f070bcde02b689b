#include "quadlab/geometry.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "quadlab/errors.hpp"

namespace quadlab {

double length(const Point2& v) { return std::hypot(v.x.to_double(), v.y.to_double()); }

double distance(const Point2& p, const Point2& q) { return length(p - q); }

Point2 rotate(const Point2& p, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const double x = p.x.to_double();
  const double y = p.y.to_double();
  return {c * x - s * y, s * x + c * y};
}

Line::Line(Point2 anchor, Point2 direction) : anchor_(std::move(anchor)), direction_(std::move(direction)) {
  require_same_mode(anchor_.x, anchor_.y);
  require_same_mode(anchor_.x, direction_.x);
  require_same_mode(direction_.x, direction_.y);
  if (direction_.x.is_zero() && direction_.y.is_zero()) throw std::invalid_argument("line direction is zero");
  if (mode() == Mode::Approximate) {
    const double n = length(direction_);
    direction_ = {direction_.x.to_double() / n, direction_.y.to_double() / n};
  }
}

Line Line::with_slope(Point2 anchor, const Scalar& slope) {
  Point2 dir{Scalar::one(slope.mode()), slope};
  return Line(std::move(anchor), std::move(dir));
}

Point2 Line::unit_direction() const {
  if (mode() == Mode::Approximate) return direction_;
  Scalar n = (direction_.x * direction_.x + direction_.y * direction_.y).sqrt();
  return {direction_.x / n, direction_.y / n};
}

PlanarQuad::PlanarQuad(std::array<Point2, 4> vertices) : vertices_(std::move(vertices)) {
  for (std::size_t i = 0; i < 4; ++i) {
    const Point2& p = vertices_[i];
    const Point2& q = vertices_[(i + 1) % 4];
    require_same_mode(p.x, q.x);
    if (p == q) throw std::invalid_argument("consecutive quad vertices coincide");
  }
}

Point2 line_intersection(const Line& l1, const Line& l2, double parallel_tol) {
  const Point2& d1 = l1.direction();
  const Point2& d2 = l2.direction();
  const Scalar det = cross(d1, d2);
  if (l1.mode() == Mode::Exact) {
    if (det.is_zero()) throw ParallelLines("lines are parallel");
  } else if (std::abs(det.to_double()) <= parallel_tol) {
    throw ParallelLines("lines are parallel within tolerance");
  }
  const Scalar t = cross(l2.anchor() - l1.anchor(), d2) / det;
  return l1.anchor() + t * d1;
}

Scalar signed_distance(const Point2& p, const Point2& q, const Point2& u) {
#ifndef NDEBUG
  if (u.mode() == Mode::Exact) {
    assert(dot(u, u) == Scalar::one(Mode::Exact));
  } else {
    assert(std::abs(dot(u, u).to_double() - 1.0) <= 2 * tol::kUnitLength);
  }
#endif
  return dot(p - q, u);
}

Scalar signed_area(std::span<const Point2> poly) {
  if (poly.size() < 3) throw std::invalid_argument("signed_area needs at least 3 points");
  Scalar twice = Scalar::zero(poly[0].mode());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2& p = poly[i];
    const Point2& q = poly[(i + 1) % poly.size()];
    twice += p.x * q.y - q.x * p.y;
  }
  return twice / 2;
}

bool is_strictly_convex(std::span<const Point2> poly) {
  const std::size_t n = poly.size();
  if (n < 3) return false;
  int orientation = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 e1 = poly[(i + 1) % n] - poly[i];
    const Point2 e2 = poly[(i + 2) % n] - poly[(i + 1) % n];
    const int s = cross(e1, e2).sign();
    if (s == 0) return false;
    if (orientation == 0) orientation = s;
    else if (s != orientation) return false;
  }
  // Equal turn signs still admit a doubly wound star for n >= 5; for n = 4
  // this cannot happen.
  return true;
}

}  // namespace quadlab
