#pragma once

#include <array>
#include <cstdint>
#include <numbers>
#include <optional>

#include "quadlab/geometry.hpp"

namespace quadlab {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Arcs are snapped to multiples of 2^-50 rad. Every arc, arc sum and morph
/// shift is then below 8 in magnitude and lies on this grid, so sums and
/// differences of arcs are exact in binary64. In particular morph and recut
/// move interior angles by exactly the intended amount.
inline constexpr double kArcQuantum = 0x1p-50;

double snap_to_arc_grid(double radians);

using Arcs = std::array<double, 4>;

/// A (possibly degenerate) cyclic quadrilateral: four arcs on a circle of
/// diameter D centered at the origin, starting at angle theta0.
///
/// Invariants: D > 0, every arc >= 0 and on the arc grid, the arcs sum to
/// 2*pi exactly (in binary64), and at most one arc is zero. A zero arc is a
/// triangle with a doubled ("marked") vertex.
class CircleQuad {
 public:
  /// Unit-diameter square.
  CircleQuad() = default;

  const Arcs& arcs() const { return arcs_; }
  double arc(int i) const { return arcs_[static_cast<std::size_t>(i)]; }
  double diameter() const { return diameter_; }
  double theta0() const { return theta0_; }

  bool is_marked_triangle() const;
  /// Index of the zero arc of a marked triangle.
  std::optional<int> zero_arc() const;

  friend bool operator==(const CircleQuad&, const CircleQuad&) = default;

 private:
  friend CircleQuad make_quad(double, double, const Arcs&);
  friend CircleQuad with_exact_arcs(const CircleQuad&, const Arcs&, double);
  CircleQuad(double d, double theta0, const Arcs& arcs) : diameter_(d), theta0_(theta0), arcs_(arcs) {}

  double diameter_ = 1.0;
  double theta0_ = 0.0;
  Arcs arcs_{kPi / 2.0, kPi / 2.0, kPi / 2.0, kPi / 2.0};
};

/// Validating constructor. Arcs may drift from 2*pi by up to 1e-10; they are
/// snapped to the arc grid and the largest arc absorbs the remainder, so
/// zero arcs stay zero. Throws BadDiameter or BadArcs.
CircleQuad make_quad(double diameter, double theta0, const Arcs& arcs);

/// Replaces the arcs of `q` with `arcs`, which must already be on the arc
/// grid with an exact 2*pi sum (as produced by arc arithmetic on a valid
/// quad). Throws BadArcs otherwise.
CircleQuad with_exact_arcs(const CircleQuad& q, const Arcs& arcs, double diameter);

struct QuadMetrics {
  std::array<double, 4> sides{};  // a, b, c, d
  double semiperimeter = 0.0;
  double area = 0.0;              // signed area of the vertex cycle
  double brahmagupta_sq = 0.0;    // (s-a)(s-b)(s-c)(s-d)
  std::optional<double> ratio_c;  // area^2 / brahmagupta_sq; empty when B^2 == 0
  std::array<double, 2> diagonals{};
  double diag_angle = 0.0;        // (s1 + s3) / 2
  double phi = 0.0;               // (d1^2 + d2^2) / D^2
};

/// Vertex i at angle theta0 + s1 + ... + s_{i-1}. A zero arc makes the two
/// vertices it joins bitwise identical.
std::array<Point2, 4> vertices(const CircleQuad& q);

QuadMetrics metrics(const CircleQuad& q);

/// Interior angles at P1..P4: (s2+s3)/2, (s3+s4)/2, (s4+s1)/2, (s1+s2)/2.
std::array<double, 4> interior_angles(const CircleQuad& q);

double diag_angle(const CircleQuad& q);

/// sin^2((s1+s2)/2) + sin^2((s2+s3)/2); independent of D.
double phi(const CircleQuad& q);

bool is_square(const CircleQuad& q, double tol);

/// Deterministic random convex quad: arcs >= min_arc, D uniform in [0.5, 2].
CircleQuad random_convex(std::uint64_t seed, double min_arc);

/// Marked triangle with s4 = 0 and the other arcs >= min_arc.
CircleQuad random_marked_triangle(std::uint64_t seed, double min_arc);

/// Convex quad with s1 + s3 = pi exactly (perpendicular diagonals).
CircleQuad random_perpendicular(std::uint64_t seed, double min_arc);

/// Recovers the arc representation of four concyclic points, traversed in
/// the given order. A clockwise cycle is mirrored first (an isometry), so
/// the result is congruent to the input. Throws BadArcs when the points are
/// not in convex position on their circumcircle.
CircleQuad circle_quad_from_vertices(const std::array<Point2, 4>& pts);

}  // namespace quadlab
