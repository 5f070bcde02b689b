#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "quadlab/geometry.hpp"

namespace quadlab {

/// Slopes of the four lines of a fiber L(rho, sigma): l_a, l_b, l_c, l_d have
/// slopes rho, sigma, -rho, -sigma.
///
/// rho > 0 and sigma != 0 with |sigma| != rho. The sign of sigma is free:
/// with side 1 pinned to l_a, about half of all convex cyclic quads need a
/// negative sigma. Exact slopes must be Pythagorean (1 + slope^2 a rational
/// square) so that unit side directions stay rational.
class FiberSlopes {
 public:
  /// Throws BadSlopes, or NonPythagoreanExact naming the offending slope.
  static FiberSlopes make(Scalar rho, Scalar sigma);

  const Scalar& rho() const { return rho_; }
  const Scalar& sigma() const { return sigma_; }
  Mode mode() const { return rho_.mode(); }

 private:
  FiberSlopes(Scalar rho, Scalar sigma) : rho_(std::move(rho)), sigma_(std::move(sigma)) {}
  Scalar rho_;
  Scalar sigma_;
};

/// A point of L(rho, sigma): (x, y) = l_b ∩ l_d, while l_a ∩ l_c is the origin.
struct FiberPoint {
  FiberSlopes slopes;
  Scalar x;
  Scalar y;
};

struct SignedSides {
  Scalar a, b, c, d;
  Scalar area;

  /// (s-a)(s-b)(s-c)(s-d) with s the signed semiperimeter.
  Scalar brahmagupta_sq() const;
  /// area^2 / brahmagupta_sq, or nothing when the denominator vanishes.
  std::optional<Scalar> ratio_c() const;
};

/// Orientation choices that make a, b, c, d and the area positive on one
/// convex configuration of the fiber.
struct SignConvention {
  std::array<int, 4> side_signs{1, 1, 1, 1};
  int area_sign = 1;
  Scalar ref_x;
  Scalar ref_y;
};

/// l_a, l_b, l_c, l_d for the given point.
std::array<Line, 4> fiber_lines(const FiberPoint& fp);

/// (l_d ∩ l_a, l_a ∩ l_b, l_b ∩ l_c, l_c ∩ l_d). Every coordinate is linear in
/// (x, y); all four vertices coincide at the origin when x = y = 0.
std::array<Point2, 4> fiber_vertices(const FiberPoint& fp);

/// The same vertices as a PlanarQuad; throws std::invalid_argument when two
/// consecutive vertices coincide (only at x = y = 0).
PlanarQuad quad_from_fiber(const FiberPoint& fp);

/// Candidate points (1, m) scanned for a convex configuration, in scan
/// order: fans of slopes m strictly between consecutive critical slopes
/// {0, ±rho, ±sigma} and beyond them, positive m first.
std::vector<std::pair<Scalar, Scalar>> convexity_candidates(const FiberSlopes& slopes);

/// Signs read off at (x, y), which must give a strictly convex quad
/// (std::invalid_argument otherwise).
SignConvention sign_convention_at(const FiberSlopes& slopes, const Scalar& x, const Scalar& y);

/// Sign convention from the first convex candidate in scan order.
SignConvention find_sign_convention(const FiberSlopes& slopes);

/// Side lengths measured along u_a = (1, rho), u_b = (1, sigma), u_c = (1, -rho),
/// u_d = (1, -sigma) normalized, and the raw signed area, before any sign
/// normalization.
SignedSides raw_sides_and_area(const FiberPoint& fp);

SignedSides signed_sides_and_area(const FiberPoint& fp, const SignConvention& conv);
SignedSides signed_sides_and_area(const FiberPoint& fp);

using Monomial = std::pair<int, int>;  // (i, j) for x^i y^j

/// Exact (or least-squares) coefficients of A(x, y) and B^2(x, y) on a fiber.
struct FiberReport {
  Scalar rho;
  Scalar sigma;
  bool exact = false;
  int grid_radius = 0;
  std::size_t samples = 0;
  std::map<Monomial, Scalar> coeffs_a;   // degree <= 2
  std::map<Monomial, Scalar> coeffs_b2;  // degree <= 4
  Scalar kappa;                          // coeffs_a[(1,1)]
  Scalar mu;                             // coeffs_b2[(2,2)]
  Scalar max_offdiag_a;
  Scalar max_offdiag_b2;
  Scalar kappa_sq_minus_mu;
  /// Fitted polynomials reproduce a direct evaluation at an off-grid point
  /// (exactly, or within `fit_tol` relative in approximate mode).
  bool offgrid_agrees = false;

  /// Off-(xy) and off-(x^2 y^2) coefficients vanish and kappa^2 == mu:
  /// exactly in exact mode, relative to |kappa| and |mu| within `fit_tol`
  /// otherwise.
  bool certified(double fit_tol) const;
};

/// Monomials x^i y^j with i + j <= degree, ordered by total degree, then by
/// descending i.
std::vector<Monomial> monomial_basis(int degree);

/// Samples A and B^2 on the grid {-r..r}^2 and solves for their monomial
/// coefficients. Exact mode demands an exactly consistent overdetermined
/// system and throws InconsistentFit if it is not.
FiberReport interpolate_fiber_polynomials(const FiberSlopes& slopes, int grid_radius, double fit_tol = tol::kFiberFit);

/// Rigid motion taking a cyclic quad into its fiber frame: rotate by
/// `rotation` about the origin, then add `translation`.
struct FiberEmbedding {
  FiberPoint point;
  double rotation = 0.0;
  Point2 translation;

  Point2 apply(const Point2& p) const;
};

/// Rotates and translates a cyclic quad (side 1 taken as l_a) into
/// L(rho, sigma). Throws NotCyclic, NonGeneric (a ∥ c or b ∥ d) or
/// DegenerateSlope.
FiberEmbedding fiber_from_quad(const PlanarQuad& pq);

/// The fiber point with the same slopes at (x', y').
FiberPoint morph_in_fiber(const FiberPoint& fp, const Scalar& x, const Scalar& y);

}  // namespace quadlab
