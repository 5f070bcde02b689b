#pragma once

#include <optional>
#include <vector>

#include "quadlab/errors.hpp"
#include "quadlab/transforms.hpp"

namespace quadlab {

enum class StepKind { Morph, Recut };

struct ReductionStep {
  StepKind kind = StepKind::Morph;
  double morph_t = 0.0;                                  // Morph only
  DiagonalChoice diagonal = DiagonalChoice::D13;         // Recut only
  CircleQuad quad_after;
  double phi_after = 0.0;
  double diag_angle_after = 0.0;
  bool is_marked_triangle = false;
};

struct ReductionTrace {
  CircleQuad start;
  std::vector<ReductionStep> steps;
  bool terminated = false;
  std::vector<double> phi_ratios;   // phi after / phi before, one per morph-recut round
  std::vector<double> phi_before;   // phi at the start of the same rounds

  /// Number of completed morph-recut rounds.
  std::size_t rounds() const { return phi_ratios.size(); }
  const CircleQuad& last() const { return steps.empty() ? start : steps.back().quad_after; }
};

/// Raised when reduce_to_square runs out of rounds; carries the partial trace.
class RoundLimitExceeded : public Error {
 public:
  RoundLimitExceeded(const std::string& what, ReductionTrace partial)
      : Error(what), trace_(std::move(partial)) {}
  const ReductionTrace& trace() const { return trace_; }

 private:
  ReductionTrace trace_;
};

/// D13 if d1 > d2, D24 if d2 > d1, D13 on an exact tie.
DiagonalChoice longest_diagonal(const CircleQuad& q);

inline constexpr int kDefaultMaxRounds = 200;

/// Morph to the largest diagonal angle, recut along the longest diagonal,
/// repeat until the quad is a square within `tol`. The diameter is fixed at
/// 1 throughout. A round whose morph already yields a square stops there
/// without recutting. Throws RoundLimitExceeded after `max_rounds` rounds.
ReductionTrace reduce_to_square(const CircleQuad& q, int max_rounds = kDefaultMaxRounds, double tol = tol::kSquare);

/// Index of the first morph step reaching perpendicular diagonals (within
/// `tol`) with phi > 1, the point after which the trace should contain at
/// most two further perpendicular quads, the last one a square.
std::optional<std::size_t> perpendicular_anchor(const ReductionTrace& trace, double tol = tol::kPerpendicular);

/// max(0, ceil(log(1/phi0) / log(3/2))) + 2: the number of rounds the 3/2
/// growth of phi permits.
int round_bound(double phi0);

struct PerpendicularCheck {
  double residual = 0.0;       // |A^2 - B^2| / max(B^2, 1e-300)
  double half_product_gap = 0.0;  // |A - d1*d2/2| / D^2
};

/// Evaluates Brahmagupta's identity on a quad with perpendicular diagonals
/// and cross-checks A against d1*d2/2. Throws NotPerpendicular when
/// |diag_angle - pi/2| > tol.
PerpendicularCheck perpendicular_check(const CircleQuad& q, double tol = tol::kPerpendicular);

}  // namespace quadlab
