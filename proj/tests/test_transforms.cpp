#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "quadlab/errors.hpp"
#include "quadlab/transforms.hpp"

using namespace quadlab;

namespace {

constexpr double h = kPi / 2.0;

oracle::DPoint as_d(const Point2& p) { return {p.x.to_double(), p.y.to_double()}; }

double c_of(const CircleQuad& q) { return *metrics(q).ratio_c; }

}  // namespace

TEST_CASE("morph keeps angles and shifts arcs") {
  const CircleQuad sq;
  const CircleQuad m = morph(sq, {kPi / 6.0, 1.0});
  CHECK(m.arc(0) == doctest::Approx(2.0 * kPi / 3.0));
  CHECK(m.arc(1) == doctest::Approx(kPi / 3.0));
  CHECK(m.arc(2) == doctest::Approx(2.0 * kPi / 3.0));
  CHECK(m.arc(3) == doctest::Approx(kPi / 3.0));
  CHECK(interior_angles(m) == interior_angles(sq));
}

TEST_CASE("scaling morph doubles sides") {
  const CircleQuad q = random_convex(4, 0.05);
  const CircleQuad m = morph(q, {0.0, 2.0});
  for (std::size_t i = 0; i < 4; ++i) CHECK(metrics(m).sides[i] == doctest::Approx(2.0 * metrics(q).sides[i]));
  CHECK(interior_angles(m) == interior_angles(q));
}

TEST_CASE("morph feasibility") {
  CHECK_THROWS_AS(morph(CircleQuad{}, {h, 1.0}), InfeasibleMorph);
  CHECK_THROWS_AS(morph(CircleQuad{}, {h + 0.1, 1.0}), InfeasibleMorph);
  CHECK_THROWS_AS(morph(CircleQuad{}, {0.1, 0.0}), BadDiameter);
  const CircleQuad q = make_quad(1.0, 0.0, {0.5, 1.0, 1.5, kTwoPi - 3.0});
  const auto [lo, hi] = morph_interval(q);
  CHECK(lo == -0.5);
  CHECK(hi == 1.0);
  const CircleQuad edge = morph(q, {hi, 1.0});
  CHECK(edge.is_marked_triangle());
}

TEST_CASE("morph preserves C along the fiber") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const CircleQuad q = random_convex(seed, 0.05);
    const auto [lo, hi] = morph_interval(q);
    for (int k = 1; k < 10; ++k) {
      const CircleQuad m = morph(q, {lo + (hi - lo) * k / 10.0, 1.0});
      CHECK(interior_angles(m) == interior_angles(q));
      CHECK(std::abs(c_of(m) - c_of(q)) <= 1e-10);
    }
  }
}

TEST_CASE("recut swaps arcs as a planar reflection") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const CircleQuad q = random_convex(seed, 0.05);
    const auto v = vertices(q);

    const CircleQuad r13 = recut(q, DiagonalChoice::D13);
    CHECK(r13.arc(0) == q.arc(1));
    CHECK(r13.arc(1) == q.arc(0));
    CHECK(r13.arc(2) == q.arc(2));
    CHECK(r13.arc(3) == q.arc(3));
    const auto w = vertices(r13);
    const auto p2 = oracle::reflect_across_bisector(as_d(v[1]), as_d(v[0]), as_d(v[2]));
    CHECK(w[1].x.to_double() == doctest::Approx(p2.x).epsilon(1e-12));
    CHECK(w[1].y.to_double() == doctest::Approx(p2.y).epsilon(1e-12));
    for (std::size_t i : {0u, 2u, 3u}) {
      CHECK(w[i].x.to_double() == doctest::Approx(v[i].x.to_double()).epsilon(1e-12));
      CHECK(w[i].y.to_double() == doctest::Approx(v[i].y.to_double()).epsilon(1e-12));
    }

    const CircleQuad r24 = recut(q, DiagonalChoice::D24);
    const auto u = vertices(r24);
    const auto p3 = oracle::reflect_across_bisector(as_d(v[2]), as_d(v[1]), as_d(v[3]));
    CHECK(u[2].x.to_double() == doctest::Approx(p3.x).epsilon(1e-12));
    CHECK(u[2].y.to_double() == doctest::Approx(p3.y).epsilon(1e-12));
  }
}

TEST_CASE("recut is an involution and preserves C and the side multiset") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const CircleQuad q = random_convex(seed, 0.05);
    for (DiagonalChoice d : {DiagonalChoice::D13, DiagonalChoice::D24}) {
      const CircleQuad r = recut(q, d);
      CHECK(recut(r, d) == q);
      auto a = metrics(q).sides;
      auto b = metrics(r).sides;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
      CHECK(std::abs(c_of(r) - c_of(q)) <= 1e-12);
      CHECK(std::abs(metrics(r).area - metrics(q).area) <= 1e-12);
      CHECK(r.diameter() == q.diameter());
    }
  }
}

TEST_CASE("morph toward perpendicular diagonals") {
  const MaxDiagMorph sq = morph_to_max_diag_angle(CircleQuad{});
  CHECK(sq.t == 0.0);
  CHECK(diag_angle(sq.quad) == h);

  const CircleQuad kite = make_quad(1.0, 0.0, {kPi / 4, 3 * kPi / 4, kPi / 4, 3 * kPi / 4});
  const MaxDiagMorph r = morph_to_max_diag_angle(kite);
  CHECK(r.t == doctest::Approx(kPi / 4));
  CHECK(diag_angle(r.quad) == doctest::Approx(h));
  // Measure the diagonals in the plane: they should cross at a right angle.
  const auto v = vertices(r.quad);
  const Point2 e1 = v[2] - v[0];
  const Point2 e2 = v[3] - v[1];
  CHECK(dot(e1, e2).to_double() == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
}

TEST_CASE("clamped morph lands on a marked triangle") {
  const CircleQuad thin = make_quad(1.0, 0.0, {0.1, 0.2, 0.1, kTwoPi - 0.4});
  const MaxDiagMorph r = morph_to_max_diag_angle(thin);
  CHECK(r.t == doctest::Approx(0.2));
  CHECK(r.quad.is_marked_triangle());
  // Diagonal angle grows monotonically in t up to the clamp.
  double prev = diag_angle(thin);
  for (int k = 1; k <= 10; ++k) {
    const double now = diag_angle(morph(thin, {0.02 * k, 1.0}));
    CHECK(now > prev);
    prev = now;
  }
}

TEST_CASE("perturbing one pair of opposite angles") {
  const CircleQuad p = perturb_opposite_angles(CircleQuad{}, AnglePair::P1P3, snap_to_arc_grid(kPi / 12));
  const auto a = interior_angles(p);
  const double d = snap_to_arc_grid(kPi / 12);
  CHECK(a[0] == h + d);
  CHECK(a[1] == h);
  CHECK(a[2] == h - d);
  CHECK(a[3] == h);
  CHECK(perturb_opposite_angles(CircleQuad{}, AnglePair::P2P4, 0.0) == CircleQuad{});

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const CircleQuad q = random_convex(seed, 0.05);
    const double delta = snap_to_arc_grid(0.02);
    const CircleQuad x = perturb_opposite_angles(q, AnglePair::P2P4, delta);
    const auto b = interior_angles(q);
    const auto c = interior_angles(x);
    CHECK(c[0] == b[0]);
    CHECK(c[2] == b[2]);
    CHECK(c[3] == b[3] + delta);
    CHECK(c[1] == b[1] - delta);
    CHECK(std::abs(c_of(x) - c_of(q)) <= 1e-10);
    CHECK(perturb_opposite_angles(perturb_opposite_angles(q, AnglePair::P1P3, delta), AnglePair::P1P3, -delta) == q);
  }
}

TEST_CASE("diagonal names") {
  CHECK(to_string(DiagonalChoice::D13) == "D13");
  CHECK(to_string(DiagonalChoice::D24) == "D24");
}
