#pragma once

#include <string_view>
#include <utility>

#include "quadlab/cyclic_quad.hpp"

namespace quadlab {

/// Which diagonal a recut cuts along.
enum class DiagonalChoice { D13, D24 };

/// Which pair of opposite interior angles perturb_opposite_angles moves.
enum class AnglePair { P1P3, P2P4 };

std::string_view to_string(DiagonalChoice d);

struct MorphParams {
  double t = 0.0;      // arc shift: (+t, -t, +t, -t)
  double scale = 1.0;  // diameter multiplier
};

/// Closed interval of feasible arc shifts [max(-s1,-s3), min(s2,s4)].
std::pair<double, double> morph_interval(const CircleQuad& q);

/// Same interior angles, new shape: arcs (s1+t, s2-t, s3+t, s4-t) and
/// diameter scale*D. t is snapped to the arc grid; shifts outside the
/// feasible interval by up to 1e-12 are clamped onto it. Throws
/// InfeasibleMorph when t is further out or would zero two arcs, and
/// BadDiameter for a non-positive scale.
CircleQuad morph(const CircleQuad& q, const MorphParams& p);

/// Cut along a diagonal and reflect one triangle across its perpendicular
/// bisector. D13 reflects P2 (swaps s1 and s2); D24 reflects P3 (swaps s2
/// and s3). Reflecting the other triangle instead gives a congruent quad.
CircleQuad recut(const CircleQuad& q, DiagonalChoice diag);

struct MaxDiagMorph {
  CircleQuad quad;
  double t = 0.0;
};

/// Morph (scale 1) with t = clamp((pi - s1 - s3)/2, feasible interval),
/// bringing the diagonal angle (s1+s3)/2 as close to pi/2 as the fiber
/// allows. A clamped result is a marked triangle.
MaxDiagMorph morph_to_max_diag_angle(const CircleQuad& q);

/// recut -> morph(t = delta) -> recut on the diagonal matching `pair`.
/// P1P3: arcs become (s1-d, s2+d, s3+d, s4-d); the angle at P1 grows by
/// delta and the angle at P3 shrinks by delta.
/// P2P4: arcs become (s1+d, s2+d, s3-d, s4-d); the angle at P4 grows by
/// delta and the angle at P2 shrinks by delta.
/// The other pair of angles is untouched. Throws InfeasibleMorph.
CircleQuad perturb_opposite_angles(const CircleQuad& q, AnglePair pair, double delta);

}  // namespace quadlab
