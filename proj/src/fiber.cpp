#include "quadlab/fiber.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "quadlab/errors.hpp"

namespace quadlab {

namespace {

bool is_pythagorean(const Scalar& slope) {
  return (Scalar::one(Mode::Exact) + slope * slope).exact_sqrt().has_value();
}

// Angle of a direction reduced to [0, pi).
double direction_angle(const Point2& v) {
  double a = std::atan2(v.y.to_double(), v.x.to_double());
  if (a < 0.0) a += std::numbers::pi;
  if (a >= std::numbers::pi) a -= std::numbers::pi;
  return a;
}

// Representative of an angle modulo pi in (-pi/2, pi/2].
double wrap_half_turn(double a) {
  const double pi = std::numbers::pi;
  a = std::fmod(a, pi);
  if (a <= -pi / 2) a += pi;
  if (a > pi / 2) a -= pi;
  return a;
}

Scalar pow_int(const Scalar& base, int e) {
  Scalar out = Scalar::one(base.mode());
  for (int k = 0; k < e; ++k) out *= base;
  return out;
}

Scalar evaluate(const std::map<Monomial, Scalar>& coeffs, const Scalar& x, const Scalar& y) {
  Scalar sum = Scalar::zero(x.mode());
  for (const auto& [m, c] : coeffs) sum += c * pow_int(x, m.first) * pow_int(y, m.second);
  return sum;
}

// Gauss-Jordan elimination over the rationals. Every equation beyond the
// rank must reduce to 0 = 0; otherwise the samples do not come from a
// polynomial in the basis.
std::vector<Scalar> solve_exact(std::vector<std::vector<Scalar>> rows, std::vector<Scalar> rhs) {
  const std::size_t n_rows = rows.size();
  const std::size_t n_cols = rows.front().size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < n_cols; ++col) {
    std::size_t p = pivot_row;
    while (p < n_rows && rows[p][col].is_zero()) ++p;
    if (p == n_rows) throw InconsistentFit("monomial basis is rank deficient on the sample grid");
    std::swap(rows[p], rows[pivot_row]);
    std::swap(rhs[p], rhs[pivot_row]);
    const Scalar inv = Scalar::one(Mode::Exact) / rows[pivot_row][col];
    for (auto& v : rows[pivot_row]) v *= inv;
    rhs[pivot_row] *= inv;
    for (std::size_t r = 0; r < n_rows; ++r) {
      if (r == pivot_row || rows[r][col].is_zero()) continue;
      const Scalar f = rows[r][col];
      for (std::size_t c = col; c < n_cols; ++c) rows[r][c] -= f * rows[pivot_row][c];
      rhs[r] -= f * rhs[pivot_row];
    }
    ++pivot_row;
  }
  for (std::size_t r = pivot_row; r < n_rows; ++r)
    if (!rhs[r].is_zero()) throw InconsistentFit("exact fiber samples are inconsistent with the monomial basis");
  return {rhs.begin(), rhs.begin() + static_cast<std::ptrdiff_t>(n_cols)};
}

std::vector<Scalar> solve_least_squares(const std::vector<std::vector<Scalar>>& rows, const std::vector<Scalar>& rhs) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  Eigen::VectorXd b(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c].to_double();
    b(static_cast<Eigen::Index>(r)) = rhs[r].to_double();
  }
  const Eigen::VectorXd sol = m.colPivHouseholderQr().solve(b);
  std::vector<Scalar> out;
  for (Eigen::Index i = 0; i < sol.size(); ++i) out.emplace_back(sol(i));
  return out;
}

std::map<Monomial, Scalar> fit(const std::vector<Monomial>& basis, const std::vector<std::pair<Scalar, Scalar>>& pts,
                               const std::vector<Scalar>& values, Mode mode) {
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(pts.size());
  for (const auto& [x, y] : pts) {
    std::vector<Scalar> row;
    row.reserve(basis.size());
    for (const auto& [i, j] : basis) row.push_back(pow_int(x, i) * pow_int(y, j));
    rows.push_back(std::move(row));
  }
  const auto sol = mode == Mode::Exact ? solve_exact(rows, values) : solve_least_squares(rows, values);
  std::map<Monomial, Scalar> out;
  for (std::size_t k = 0; k < basis.size(); ++k) out.emplace(basis[k], sol[k]);
  return out;
}

Scalar max_abs_except(const std::map<Monomial, Scalar>& coeffs, Monomial keep, Mode mode) {
  Scalar worst = Scalar::zero(mode);
  for (const auto& [m, c] : coeffs)
    if (m != keep) worst = max_abs(worst, c);
  return worst;
}

}  // namespace

FiberSlopes FiberSlopes::make(Scalar rho, Scalar sigma) {
  require_same_mode(rho, sigma);
  if (rho.mode() == Mode::Approximate &&
      (!std::isfinite(rho.to_double()) || !std::isfinite(sigma.to_double())))
    throw BadSlopes("fiber slopes must be finite");
  if (rho.sign() <= 0) throw BadSlopes("rho must be positive, got " + rho.to_string());
  if (sigma.is_zero()) throw BadSlopes("sigma must be nonzero");
  if (sigma.abs() == rho) throw BadSlopes("|sigma| must differ from rho (parallel fiber lines)");
  if (rho.is_exact()) {
    if (!is_pythagorean(rho)) throw NonPythagoreanExact("rho = " + rho.to_string() + " is not Pythagorean: 1 + rho^2 is not a rational square");
    if (!is_pythagorean(sigma)) throw NonPythagoreanExact("sigma = " + sigma.to_string() + " is not Pythagorean: 1 + sigma^2 is not a rational square");
  }
  return FiberSlopes(std::move(rho), std::move(sigma));
}

Scalar SignedSides::brahmagupta_sq() const {
  const Scalar s = (a + b + c + d) / 2;
  return (s - a) * (s - b) * (s - c) * (s - d);
}

std::optional<Scalar> SignedSides::ratio_c() const {
  const Scalar b2 = brahmagupta_sq();
  if (b2.is_zero()) return std::nullopt;
  return area * area / b2;
}

std::array<Line, 4> fiber_lines(const FiberPoint& fp) {
  const Mode mode = fp.slopes.mode();
  const Point2 origin{Scalar::zero(mode), Scalar::zero(mode)};
  const Point2 apex{fp.x, fp.y};
  const Scalar& rho = fp.slopes.rho();
  const Scalar& sigma = fp.slopes.sigma();
  return {Line::with_slope(origin, rho), Line::with_slope(apex, sigma), Line::with_slope(origin, -rho),
          Line::with_slope(apex, -sigma)};
}

std::array<Point2, 4> fiber_vertices(const FiberPoint& fp) {
  const auto [la, lb, lc, ld] = fiber_lines(fp);
  // Slopes are distinct by construction, so none of these can be parallel
  // in exact mode; in approximate mode only near-coincident slopes fail.
  return {line_intersection(ld, la), line_intersection(la, lb), line_intersection(lb, lc), line_intersection(lc, ld)};
}

PlanarQuad quad_from_fiber(const FiberPoint& fp) { return PlanarQuad(fiber_vertices(fp)); }

std::vector<std::pair<Scalar, Scalar>> convexity_candidates(const FiberSlopes& slopes) {
  const Mode mode = slopes.mode();
  const Scalar zero = Scalar::zero(mode);
  std::vector<Scalar> critical{zero, slopes.rho(), -slopes.rho(), slopes.sigma(), -slopes.sigma()};
  std::sort(critical.begin(), critical.end(), [](const Scalar& l, const Scalar& r) { return l < r; });

  constexpr int kFan = 8;
  std::vector<Scalar> ms;
  for (std::size_t i = 0; i + 1 < critical.size(); ++i) {
    const Scalar& lo = critical[i];
    const Scalar& hi = critical[i + 1];
    for (int k = 1; k < kFan; ++k) ms.push_back(lo + (hi - lo) * k / kFan);
  }
  const Scalar one = Scalar::one(mode);
  for (int k = 1; k <= 4; ++k) {
    ms.push_back(critical.back() + one * k);
    ms.push_back(critical.front() - one * k);
  }
  // Positive slopes first (ascending), then negative ones (descending).
  std::stable_sort(ms.begin(), ms.end(), [](const Scalar& l, const Scalar& r) {
    const bool lp = l.sign() > 0;
    const bool rp = r.sign() > 0;
    if (lp != rp) return lp;
    return lp ? l < r : r < l;
  });
  std::vector<std::pair<Scalar, Scalar>> out;
  out.reserve(ms.size());
  for (auto& m : ms) out.emplace_back(one, std::move(m));
  return out;
}

SignedSides raw_sides_and_area(const FiberPoint& fp) {
  const auto lines = fiber_lines(fp);
  const auto v = fiber_vertices(fp);
  std::array<Scalar, 4> len;
  for (std::size_t i = 0; i < 4; ++i) len[i] = signed_distance(v[(i + 1) % 4], v[i], lines[i].unit_direction());
  return {len[0], len[1], len[2], len[3], signed_area(v)};
}

SignConvention sign_convention_at(const FiberSlopes& slopes, const Scalar& x, const Scalar& y) {
  const FiberPoint fp{slopes, x, y};
  if (!is_strictly_convex(fiber_vertices(fp)))
    throw std::invalid_argument("sign convention requested at a non-convex fiber point");
  const SignedSides raw = raw_sides_and_area(fp);
  SignConvention conv;
  conv.side_signs = {raw.a.sign(), raw.b.sign(), raw.c.sign(), raw.d.sign()};
  conv.area_sign = raw.area.sign();
  conv.ref_x = x;
  conv.ref_y = y;
  return conv;
}

SignConvention find_sign_convention(const FiberSlopes& slopes) {
  for (const auto& [x, y] : convexity_candidates(slopes)) {
    const FiberPoint fp{slopes, x, y};
    if (is_strictly_convex(fiber_vertices(fp))) return sign_convention_at(slopes, x, y);
  }
  throw std::logic_error("no convex configuration found among the fiber scan candidates");
}

SignedSides signed_sides_and_area(const FiberPoint& fp, const SignConvention& conv) {
  SignedSides s = raw_sides_and_area(fp);
  s.a = s.a * conv.side_signs[0];
  s.b = s.b * conv.side_signs[1];
  s.c = s.c * conv.side_signs[2];
  s.d = s.d * conv.side_signs[3];
  s.area = s.area * conv.area_sign;
  return s;
}

SignedSides signed_sides_and_area(const FiberPoint& fp) {
  return signed_sides_and_area(fp, find_sign_convention(fp.slopes));
}

std::vector<Monomial> monomial_basis(int degree) {
  std::vector<Monomial> out;
  for (int total = 0; total <= degree; ++total)
    for (int i = total; i >= 0; --i) out.emplace_back(i, total - i);
  return out;
}

bool FiberReport::certified(double fit_tol) const {
  if (exact) {
    return max_offdiag_a.is_zero() && max_offdiag_b2.is_zero() && kappa_sq_minus_mu.is_zero() && offgrid_agrees;
  }
  const double k = std::abs(kappa.to_double());
  const double m = std::abs(mu.to_double());
  return max_offdiag_a.to_double() <= fit_tol * k && max_offdiag_b2.to_double() <= fit_tol * m &&
         std::abs(kappa_sq_minus_mu.to_double()) <= fit_tol * m && offgrid_agrees && k > 0.0;
}

FiberReport interpolate_fiber_polynomials(const FiberSlopes& slopes, int grid_radius, double fit_tol) {
  if (grid_radius < 2) throw std::invalid_argument("grid_radius must be at least 2");
  const Mode mode = slopes.mode();
  const SignConvention conv = find_sign_convention(slopes);

  std::vector<std::pair<Scalar, Scalar>> pts;
  std::vector<Scalar> area_values;
  std::vector<Scalar> b2_values;
  for (int i = -grid_radius; i <= grid_radius; ++i) {
    for (int j = -grid_radius; j <= grid_radius; ++j) {
      const Scalar x = Scalar::from_int(i, mode);
      const Scalar y = Scalar::from_int(j, mode);
      // The origin collapses the quad to a point; A and B^2 are both 0 there
      // and the formulas below still apply.
      const SignedSides s = (i == 0 && j == 0)
                                ? SignedSides{Scalar::zero(mode), Scalar::zero(mode), Scalar::zero(mode),
                                              Scalar::zero(mode), Scalar::zero(mode)}
                                : signed_sides_and_area({slopes, x, y}, conv);
      pts.emplace_back(x, y);
      area_values.push_back(s.area);
      b2_values.push_back(s.brahmagupta_sq());
    }
  }

  FiberReport r;
  r.rho = slopes.rho();
  r.sigma = slopes.sigma();
  r.exact = mode == Mode::Exact;
  r.grid_radius = grid_radius;
  r.samples = pts.size();
  r.coeffs_a = fit(monomial_basis(2), pts, area_values, mode);
  r.coeffs_b2 = fit(monomial_basis(4), pts, b2_values, mode);
  r.kappa = r.coeffs_a.at({1, 1});
  r.mu = r.coeffs_b2.at({2, 2});
  r.max_offdiag_a = max_abs_except(r.coeffs_a, {1, 1}, mode);
  r.max_offdiag_b2 = max_abs_except(r.coeffs_b2, {2, 2}, mode);
  r.kappa_sq_minus_mu = r.kappa * r.kappa - r.mu;

  // Off-grid cross-check at (r + 1/2, r + 1/3).
  const Scalar ox = Scalar::from_int(grid_radius, mode) + Scalar::one(mode) / 2;
  const Scalar oy = Scalar::from_int(grid_radius, mode) + Scalar::one(mode) / 3;
  const SignedSides direct = signed_sides_and_area({slopes, ox, oy}, conv);
  const Scalar fitted_a = evaluate(r.coeffs_a, ox, oy);
  const Scalar fitted_b2 = evaluate(r.coeffs_b2, ox, oy);
  r.offgrid_agrees = approx_equal(fitted_a, direct.area, fit_tol, 0.0) &&
                     approx_equal(fitted_b2, direct.brahmagupta_sq(), fit_tol, 0.0);
  return r;
}

Point2 FiberEmbedding::apply(const Point2& p) const {
  const Point2 q = rotate(p, rotation);
  return {q.x.to_double() + translation.x.to_double(), q.y.to_double() + translation.y.to_double()};
}

FiberEmbedding fiber_from_quad(const PlanarQuad& pq) {
  std::array<Point2, 4> p;
  for (std::size_t i = 0; i < 4; ++i) p[i] = Point2{pq[i].x.to_double(), pq[i].y.to_double()};
  std::array<Point2, 4> side;
  std::array<double, 4> ang{};
  for (std::size_t i = 0; i < 4; ++i) {
    side[i] = p[(i + 1) % 4] - p[i];
    ang[i] = direction_angle(side[i]);
  }
  if (std::abs(wrap_half_turn(ang[0] - ang[2])) <= tol::kGenericParallel)
    throw NonGeneric("sides a and c are parallel (trapezoid)");
  if (std::abs(wrap_half_turn(ang[1] - ang[3])) <= tol::kGenericParallel)
    throw NonGeneric("sides b and d are parallel (trapezoid)");
  if (std::abs(wrap_half_turn((ang[0] + ang[2]) - (ang[1] + ang[3]))) > tol::kCyclic)
    throw NotCyclic("direction sums of opposite sides differ: quad is not cyclic");

  // After rotating by -(phi_a + phi_c)/2, l_a and l_c are mirror images in
  // the x-axis. Of the two branches mod pi/2 take the one with rho > 0.
  double psi = -(ang[0] + ang[2]) / 2.0;
  if (std::tan(ang[0] + psi) < 0.0) psi += std::numbers::pi / 2.0;

  std::array<Point2, 4> r;
  std::array<Point2, 4> dir;
  for (std::size_t i = 0; i < 4; ++i) {
    r[i] = rotate(p[i], psi);
    dir[i] = rotate(side[i], psi);
  }
  for (std::size_t i = 0; i < 4; ++i)
    if (std::abs(dir[i].x.to_double()) <= tol::kDegenerateSlope * length(dir[i]))
      throw DegenerateSlope("a side is vertical in the fiber frame (infinite slope)");

  auto slope = [](const Point2& v) { return v.y.to_double() / v.x.to_double(); };
  const double rho = (slope(dir[0]) - slope(dir[2])) / 2.0;
  const double sigma = (slope(dir[1]) - slope(dir[3])) / 2.0;
  if (std::abs(sigma) <= tol::kDegenerateSlope || rho <= tol::kDegenerateSlope)
    throw DegenerateSlope("a slope vanishes in the fiber frame");
  if (std::abs(std::abs(sigma) - rho) <= tol::kDegenerateSlope * rho)
    throw DegenerateSlope("|sigma| coincides with rho in the fiber frame");

  const Point2 origin = line_intersection(Line(r[0], dir[0]), Line(r[2], dir[2]));
  const Point2 shift{-origin.x.to_double(), -origin.y.to_double()};
  const Point2 apex = line_intersection(Line(r[1] + shift, dir[1]), Line(r[3] + shift, dir[3]));

  return FiberEmbedding{FiberPoint{FiberSlopes::make(rho, sigma), apex.x, apex.y}, psi, shift};
}

FiberPoint morph_in_fiber(const FiberPoint& fp, const Scalar& x, const Scalar& y) {
  require_same_mode(x, fp.x);
  require_same_mode(y, fp.y);
  return FiberPoint{fp.slopes, x, y};
}

}  // namespace quadlab
