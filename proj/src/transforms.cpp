#include "quadlab/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "quadlab/errors.hpp"

namespace quadlab {

std::string_view to_string(DiagonalChoice d) { return d == DiagonalChoice::D13 ? "D13" : "D24"; }

std::pair<double, double> morph_interval(const CircleQuad& q) {
  const Arcs& s = q.arcs();
  return {std::max(-s[0], -s[2]), std::min(s[1], s[3])};
}

CircleQuad morph(const CircleQuad& q, const MorphParams& p) {
  if (!(p.scale > 0.0) || !std::isfinite(p.scale)) throw BadDiameter("morph scale must be positive");
  if (!std::isfinite(p.t)) throw InfeasibleMorph("morph shift must be finite");
  const auto [lo, hi] = morph_interval(q);
  double t = snap_to_arc_grid(p.t);
  if (t < lo - tol::kMorphSlack || t > hi + tol::kMorphSlack)
    throw InfeasibleMorph("morph shift " + std::to_string(p.t) + " outside [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
  t = std::clamp(t, lo, hi);
  const Arcs& s = q.arcs();
  const Arcs next{s[0] + t, s[1] - t, s[2] + t, s[3] - t};
  if (std::count(next.begin(), next.end(), 0.0) >= 2)
    throw InfeasibleMorph("morph shift " + std::to_string(p.t) + " collapses two arcs");
  return with_exact_arcs(q, next, q.diameter() * p.scale);
}

CircleQuad recut(const CircleQuad& q, DiagonalChoice diag) {
  const Arcs& s = q.arcs();
  // The diagonal subtends s1+s2 (D13) or s2+s3 (D24); it has zero length
  // only when that sum is 0 or 2*pi.
  const double subtended = diag == DiagonalChoice::D13 ? s[0] + s[1] : s[1] + s[2];
  if (subtended == 0.0 || subtended == kTwoPi) throw DegenerateDiagonal("recut along a zero-length diagonal");
  Arcs next = s;
  if (diag == DiagonalChoice::D13) std::swap(next[0], next[1]);
  else std::swap(next[1], next[2]);
  return with_exact_arcs(q, next, q.diameter());
}

MaxDiagMorph morph_to_max_diag_angle(const CircleQuad& q) {
  const auto [lo, hi] = morph_interval(q);
  const double target = snap_to_arc_grid((kPi - q.arc(0) - q.arc(2)) / 2.0);
  const double t = std::clamp(target, lo, hi);
  return {morph(q, {t, 1.0}), t};
}

CircleQuad perturb_opposite_angles(const CircleQuad& q, AnglePair pair, double delta) {
  const DiagonalChoice diag = pair == AnglePair::P1P3 ? DiagonalChoice::D13 : DiagonalChoice::D24;
  const CircleQuad once = recut(q, diag);
  const CircleQuad shifted = morph(once, {delta, 1.0});
  return recut(shifted, diag);
}

}  // namespace quadlab
