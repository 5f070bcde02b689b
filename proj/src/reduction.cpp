#include "quadlab/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace quadlab {

DiagonalChoice longest_diagonal(const CircleQuad& q) {
  const auto& s = q.arcs();
  const double d1 = std::sin((s[0] + s[1]) / 2.0);
  const double d2 = std::sin((s[1] + s[2]) / 2.0);
  return d2 > d1 ? DiagonalChoice::D24 : DiagonalChoice::D13;
}

namespace {

ReductionStep make_step(StepKind kind, const CircleQuad& q) {
  ReductionStep st;
  st.kind = kind;
  st.quad_after = q;
  st.phi_after = phi(q);
  st.diag_angle_after = diag_angle(q);
  st.is_marked_triangle = q.is_marked_triangle();
  return st;
}

}  // namespace

ReductionTrace reduce_to_square(const CircleQuad& q, int max_rounds, double tol) {
  if (max_rounds < 1) throw std::invalid_argument("max_rounds must be at least 1");
  ReductionTrace trace;
  trace.start = make_quad(1.0, q.theta0(), q.arcs());
  CircleQuad cur = trace.start;
  if (is_square(cur, tol)) {
    trace.terminated = true;
    return trace;
  }
  for (int round = 0; round < max_rounds; ++round) {
    const double phi0 = phi(cur);
    const auto [morphed, t] = morph_to_max_diag_angle(cur);
    ReductionStep ms = make_step(StepKind::Morph, morphed);
    ms.morph_t = t;
    trace.steps.push_back(ms);
    if (is_square(morphed, tol)) {
      trace.terminated = true;
      return trace;
    }
    const DiagonalChoice diag = longest_diagonal(morphed);
    cur = recut(morphed, diag);
    ReductionStep rs = make_step(StepKind::Recut, cur);
    rs.diagonal = diag;
    trace.steps.push_back(rs);
    trace.phi_before.push_back(phi0);
    trace.phi_ratios.push_back(rs.phi_after / phi0);
    if (is_square(cur, tol)) {
      trace.terminated = true;
      return trace;
    }
  }
  throw RoundLimitExceeded("no square after " + std::to_string(max_rounds) + " rounds", std::move(trace));
}

std::optional<std::size_t> perpendicular_anchor(const ReductionTrace& trace, double tol) {
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& st = trace.steps[i];
    if (st.kind == StepKind::Morph && std::abs(st.diag_angle_after - kPi / 2.0) <= tol && st.phi_after > 1.0)
      return i;
  }
  return std::nullopt;
}

int round_bound(double phi0) {
  const double growth = std::ceil(std::log(1.0 / phi0) / std::log(1.5));
  return static_cast<int>(std::max(0.0, growth)) + 2;
}

PerpendicularCheck perpendicular_check(const CircleQuad& q, double tol) {
  if (std::abs(diag_angle(q) - kPi / 2.0) > tol)
    throw NotPerpendicular("diagonal angle " + std::to_string(diag_angle(q)) + " is not pi/2");
  const QuadMetrics m = metrics(q);
  PerpendicularCheck out;
  out.residual = std::abs(m.area * m.area - m.brahmagupta_sq) / std::max(m.brahmagupta_sq, 1e-300);
  const double d = q.diameter();
  out.half_product_gap = std::abs(m.area - 0.5 * m.diagonals[0] * m.diagonals[1]) / (d * d);
  return out;
}

}  // namespace quadlab
