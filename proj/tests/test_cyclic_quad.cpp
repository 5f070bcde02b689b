#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "quadlab/cyclic_quad.hpp"
#include "quadlab/errors.hpp"

using namespace quadlab;

namespace {
constexpr double h = kPi / 2.0;

oracle::DPoint as_d(const Point2& p) { return {p.x.to_double(), p.y.to_double()}; }
}  // namespace

TEST_CASE("square of diameter sqrt(2) has unit sides") {
  const CircleQuad q = make_quad(std::sqrt(2.0), 0.0, {h, h, h, h});
  const QuadMetrics m = metrics(q);
  for (double s : m.sides) CHECK(s == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(m.area == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("arc validation") {
  const CircleQuad tri = make_quad(1.0, 0.0, {h, h, kPi, 0.0});
  CHECK(tri.is_marked_triangle());
  CHECK(tri.zero_arc() == 3);
  CHECK_THROWS_AS(make_quad(1.0, 0.0, {kPi, kPi, 0.0, 0.0}), BadArcs);
  CHECK_THROWS_AS(make_quad(1.0, 0.0, {h, h, h, h + 1e-6}), BadArcs);
  CHECK_THROWS_AS(make_quad(1.0, 0.0, {-0.1, h + 0.1, kPi, 0.0}), BadArcs);
  CHECK_THROWS_AS(make_quad(0.0, 0.0, {h, h, h, h}), BadDiameter);
}

TEST_CASE("arcs land on the grid and sum to 2pi exactly") {
  const CircleQuad q = make_quad(1.0, 0.0, {0.3, 1.1, 2.0, kTwoPi - 3.4});
  double sum = 0.0;
  for (double s : q.arcs()) {
    CHECK(s == snap_to_arc_grid(s));
    sum += s;
  }
  CHECK(sum == kTwoPi);
}

TEST_CASE("square vertices for D=2") {
  const auto v = vertices(make_quad(2.0, 0.0, {h, h, h, h}));
  const double want[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(v[i].x.to_double() == doctest::Approx(want[i][0]).epsilon(1e-15).scale(1.0));
    CHECK(v[i].y.to_double() == doctest::Approx(want[i][1]).epsilon(1e-15).scale(1.0));
  }
}

TEST_CASE("a zero arc doubles a vertex bitwise") {
  const auto v = vertices(make_quad(1.3, 0.7, {1.0, 2.0, kTwoPi - 3.0, 0.0}));
  CHECK(v[3] == v[0]);
}

TEST_CASE("right isosceles triangle obeys Heron") {
  const QuadMetrics m = metrics(make_quad(2.0, 0.0, {h, h, kPi, 0.0}));
  CHECK(m.sides[0] == doctest::Approx(std::sqrt(2.0)));
  CHECK(m.sides[1] == doctest::Approx(std::sqrt(2.0)));
  CHECK(m.sides[2] == doctest::Approx(2.0));
  CHECK(m.sides[3] == 0.0);
  CHECK(m.area == doctest::Approx(1.0));
  // Heron directly from the legs: s = sqrt2 + 1.
  const double s = std::sqrt(2.0) + 1.0;
  const double heron = s * (s - std::sqrt(2.0)) * (s - std::sqrt(2.0)) * (s - 2.0);
  CHECK(heron == doctest::Approx(1.0));
  CHECK(m.brahmagupta_sq == doctest::Approx(heron));
}

TEST_CASE("C = 1 on random convex quads") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const QuadMetrics m = metrics(random_convex(seed, 0.05));
    REQUIRE(m.ratio_c.has_value());
    CHECK(std::abs(*m.ratio_c - 1.0) <= 1e-10);
  }
}

TEST_CASE("interior angles") {
  for (double a : interior_angles(CircleQuad{})) CHECK(a == h);
  const CircleQuad tri = make_quad(1.0, 0.25, {h, h, kPi, 0.0});
  const auto ang = interior_angles(tri);
  CHECK(ang[0] == doctest::Approx(3.0 * kPi / 4.0));
  // P4 coincides with P1, so the angle at P1 is the tangent-chord angle
  // between the backward tangent at P1 and the chord P1P2.
  const auto v = vertices(tri);
  const double th = tri.theta0();
  const oracle::DPoint p1 = as_d(v[0]);
  const oracle::DPoint back{p1.x + std::sin(th), p1.y - std::cos(th)};
  CHECK(oracle::angle_at(back, p1, as_d(v[1])) == doctest::Approx(ang[0]).epsilon(1e-12));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto a = interior_angles(random_convex(seed, 0.05));
    CHECK(a[0] + a[2] == kPi);
    CHECK(a[1] + a[3] == kPi);
  }
}

TEST_CASE("angles agree with the embedded polygon") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const CircleQuad q = random_convex(seed, 0.05);
    const auto v = vertices(q);
    const auto a = interior_angles(q);
    for (std::size_t i = 0; i < 4; ++i) {
      const double measured = oracle::angle_at(as_d(v[(i + 3) % 4]), as_d(v[i]), as_d(v[(i + 1) % 4]));
      CHECK(measured == doctest::Approx(a[i]).epsilon(1e-10));
    }
  }
}

TEST_CASE("square predicate") {
  CHECK(is_square(make_quad(1.0, 0.0, {h, h, h, h}), 1e-9));
  const CircleQuad near = make_quad(1.0, 0.0, {h + 1e-6, h - 1e-6, h, h});
  CHECK_FALSE(is_square(near, 1e-9));
  CHECK(is_square(near, 1e-3));
}

TEST_CASE("phi and diagonals") {
  CHECK(phi(CircleQuad{}) == doctest::Approx(2.0));
  // d2 subtends 3pi/2: sin^2(3pi/4) = 1/2.
  CHECK(phi(make_quad(1.0, 0.0, {h, h, kPi, 0.0})) == doctest::Approx(1.5));
  const CircleQuad q = random_convex(3, 0.05);
  const auto v = vertices(q);
  const QuadMetrics m = metrics(q);
  CHECK(distance(v[0], v[2]) == doctest::Approx(m.diagonals[0]));
  CHECK(distance(v[1], v[3]) == doctest::Approx(m.diagonals[1]));
  const double dd = q.diameter();
  CHECK(m.phi == doctest::Approx((m.diagonals[0] * m.diagonals[0] + m.diagonals[1] * m.diagonals[1]) / (dd * dd)));
}

TEST_CASE("generators are deterministic and honour their contracts") {
  CHECK(random_convex(9, 0.1) == random_convex(9, 0.1));
  CHECK_FALSE(random_convex(9, 0.1) == random_convex(10, 0.1));
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const CircleQuad q = random_convex(seed, 0.1);
    CHECK(*std::min_element(q.arcs().begin(), q.arcs().end()) >= 0.1);
    CHECK(q.diameter() >= 0.5);
    CHECK(q.diameter() <= 2.0);
    const CircleQuad t = random_marked_triangle(seed, 0.1);
    CHECK(t.arc(3) == 0.0);
    const CircleQuad p = random_perpendicular(seed, 0.1);
    CHECK(p.arc(0) + p.arc(2) == kPi);
  }
}

TEST_CASE("recovering arcs from vertices") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const CircleQuad q = random_convex(seed, 0.05);
    const auto v = vertices(q);
    const CircleQuad back = circle_quad_from_vertices(v);
    for (int i = 0; i < 4; ++i) CHECK(back.arc(i) == doctest::Approx(q.arc(i)).epsilon(1e-12));
    CHECK(back.diameter() == doctest::Approx(q.diameter()).epsilon(1e-12));
    // Clockwise input is mirrored: arcs come back reversed.
    const CircleQuad mir = circle_quad_from_vertices({v[3], v[2], v[1], v[0]});
    CHECK(metrics(mir).area == doctest::Approx(metrics(q).area).epsilon(1e-12));
  }
}
