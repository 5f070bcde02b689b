#include "quadlab/cyclic_quad.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "quadlab/errors.hpp"

namespace quadlab {

namespace {

int count_zero(const Arcs& arcs) {
  return static_cast<int>(std::count(arcs.begin(), arcs.end(), 0.0));
}

double sum_arcs(const Arcs& arcs) { return ((arcs[0] + arcs[1]) + arcs[2]) + arcs[3]; }

void check_diameter(double d) {
  if (!(d > 0.0) || !std::isfinite(d)) throw BadDiameter("diameter must be positive and finite, got " + std::to_string(d));
}

// Uniform point on the simplex {w >= 0, sum w = 1}, scaled into arcs with
// the given floor.
template <std::size_t N>
std::array<double, N> simplex_arcs(std::mt19937_64& rng, double total, double floor) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::array<double, N> w{};
  double sum = 0.0;
  for (auto& x : w) {
    x = -std::log1p(-unit(rng));
    sum += x;
  }
  const double spread = total - static_cast<double>(N) * floor;
  for (auto& x : w) x = floor + spread * x / sum;
  return w;
}

}  // namespace

double snap_to_arc_grid(double radians) { return std::nearbyint(radians / kArcQuantum) * kArcQuantum; }

bool CircleQuad::is_marked_triangle() const { return count_zero(arcs_) == 1; }

std::optional<int> CircleQuad::zero_arc() const {
  for (int i = 0; i < 4; ++i)
    if (arcs_[static_cast<std::size_t>(i)] == 0.0) return i;
  return std::nullopt;
}

CircleQuad make_quad(double diameter, double theta0, const Arcs& arcs) {
  check_diameter(diameter);
  if (!std::isfinite(theta0)) throw BadArcs("theta0 must be finite");
  for (double s : arcs)
    if (!(s >= 0.0) || !std::isfinite(s)) throw BadArcs("arcs must be non-negative and finite");
  if (std::abs(sum_arcs(arcs) - kTwoPi) > tol::kArcSum) throw BadArcs("arcs must sum to 2*pi");

  Arcs snapped{};
  std::transform(arcs.begin(), arcs.end(), snapped.begin(), snap_to_arc_grid);
  if (count_zero(snapped) >= 2) throw BadArcs("at most one arc may be zero");

  const auto largest = static_cast<std::size_t>(std::max_element(snapped.begin(), snapped.end()) - snapped.begin());
  double rest = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    if (i != largest) rest += snapped[i];
  snapped[largest] = kTwoPi - rest;
  if (!(snapped[largest] > 0.0)) throw BadArcs("arcs must sum to 2*pi");
  return CircleQuad(diameter, theta0, snapped);
}

CircleQuad with_exact_arcs(const CircleQuad& q, const Arcs& arcs, double diameter) {
  check_diameter(diameter);
  for (double s : arcs) {
    if (!(s >= 0.0)) throw BadArcs("negative arc");
    if (snap_to_arc_grid(s) != s) throw BadArcs("arc is off the arc grid");
  }
  if (count_zero(arcs) >= 2) throw BadArcs("at most one arc may be zero");
  if (sum_arcs(arcs) != kTwoPi) throw BadArcs("arcs must sum to 2*pi exactly");
  return CircleQuad(diameter, q.theta0(), arcs);
}

std::array<Point2, 4> vertices(const CircleQuad& q) {
  const double r = q.diameter() / 2.0;
  std::array<Point2, 4> out;
  double theta = q.theta0();
  for (std::size_t i = 0; i < 4; ++i) {
    if (i > 0 && q.arcs()[i - 1] == 0.0) {
      out[i] = out[i - 1];
    } else {
      out[i] = Point2{r * std::cos(theta), r * std::sin(theta)};
    }
    theta += q.arcs()[i];
  }
  if (q.arcs()[3] == 0.0) out[3] = out[0];
  return out;
}

QuadMetrics metrics(const CircleQuad& q) {
  QuadMetrics m;
  const double d = q.diameter();
  const Arcs& s = q.arcs();
  for (std::size_t i = 0; i < 4; ++i) m.sides[i] = d * std::sin(s[i] / 2.0);
  const auto [a, b, c, e] = m.sides;
  m.semiperimeter = (a + b + c + e) / 2.0;
  const double sp = m.semiperimeter;
  m.brahmagupta_sq = (sp - a) * (sp - b) * (sp - c) * (sp - e);

  const auto pts = vertices(q);
  m.area = signed_area(pts).to_double();
  if (m.brahmagupta_sq != 0.0) m.ratio_c = m.area * m.area / m.brahmagupta_sq;

  m.diagonals = {d * std::sin((s[0] + s[1]) / 2.0), d * std::sin((s[1] + s[2]) / 2.0)};
  m.diag_angle = diag_angle(q);
  m.phi = phi(q);
  return m;
}

std::array<double, 4> interior_angles(const CircleQuad& q) {
  const Arcs& s = q.arcs();
  return {(s[1] + s[2]) / 2.0, (s[2] + s[3]) / 2.0, (s[3] + s[0]) / 2.0, (s[0] + s[1]) / 2.0};
}

double diag_angle(const CircleQuad& q) { return (q.arc(0) + q.arc(2)) / 2.0; }

double phi(const CircleQuad& q) {
  const double u = std::sin((q.arc(0) + q.arc(1)) / 2.0);
  const double v = std::sin((q.arc(1) + q.arc(2)) / 2.0);
  return u * u + v * v;
}

bool is_square(const CircleQuad& q, double tol) {
  return std::all_of(q.arcs().begin(), q.arcs().end(), [tol](double s) { return std::abs(s - kPi / 2.0) <= tol; });
}

CircleQuad random_convex(std::uint64_t seed, double min_arc) {
  if (!(min_arc > 0.0 && min_arc < kPi / 2.0)) throw std::invalid_argument("min_arc must lie in (0, pi/2)");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> diameter(0.5, 2.0);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  const double d = diameter(rng);
  const double theta0 = angle(rng);
  // The margin keeps snapped arcs at or above min_arc.
  const auto arcs = simplex_arcs<4>(rng, kTwoPi, min_arc + 4 * kArcQuantum);
  return make_quad(d, theta0, arcs);
}

CircleQuad random_marked_triangle(std::uint64_t seed, double min_arc) {
  if (!(min_arc > 0.0 && min_arc < kPi / 2.0)) throw std::invalid_argument("min_arc must lie in (0, pi/2)");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> diameter(0.5, 2.0);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  const double d = diameter(rng);
  const double theta0 = angle(rng);
  const auto three = simplex_arcs<3>(rng, kTwoPi, min_arc + 4 * kArcQuantum);
  return make_quad(d, theta0, {three[0], three[1], three[2], 0.0});
}

CircleQuad random_perpendicular(std::uint64_t seed, double min_arc) {
  if (!(min_arc > 0.0 && min_arc < kPi / 4.0)) throw std::invalid_argument("min_arc must lie in (0, pi/4)");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> diameter(0.5, 2.0);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::uniform_real_distribution<double> arc(min_arc, kPi - min_arc);
  const double d = diameter(rng);
  const double theta0 = angle(rng);
  const double s1 = snap_to_arc_grid(arc(rng));
  const double s2 = snap_to_arc_grid(arc(rng));
  // pi is itself on the arc grid, so s1 + s3 == pi holds bitwise.
  return make_quad(d, theta0, {s1, s2, kPi - s1, kPi - s2});
}

CircleQuad circle_quad_from_vertices(const std::array<Point2, 4>& pts) {
  std::array<double, 4> x{}, y{};
  for (std::size_t i = 0; i < 4; ++i) {
    x[i] = pts[i].x.to_double();
    y[i] = pts[i].y.to_double();
  }
  double area2 = 0.0;
  for (std::size_t i = 0; i < 4; ++i) area2 += x[i] * y[(i + 1) % 4] - x[(i + 1) % 4] * y[i];
  if (area2 < 0.0)
    for (auto& v : y) v = -v;

  // Circumcenter of P1 P2 P3.
  const double ax = x[0], ay = y[0], bx = x[1], by = y[1], cx = x[2], cy = y[2];
  const double det = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
  if (det == 0.0) throw BadArcs("vertices are collinear");
  const double a2 = ax * ax + ay * ay, b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
  const double ux = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / det;
  const double uy = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / det;

  double radius = 0.0;
  std::array<double, 4> theta{};
  for (std::size_t i = 0; i < 4; ++i) {
    radius += std::hypot(x[i] - ux, y[i] - uy) / 4.0;
    theta[i] = std::atan2(y[i] - uy, x[i] - ux);
  }
  Arcs arcs{};
  for (std::size_t i = 0; i < 4; ++i) {
    double s = theta[(i + 1) % 4] - theta[i];
    if (s < 0.0) s += kTwoPi;
    arcs[i] = s;
  }
  return make_quad(2.0 * radius, theta[0], arcs);
}

}  // namespace quadlab
