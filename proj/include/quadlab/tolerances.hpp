#pragma once

#include <map>
#include <string>
#include <vector>

namespace quadlab {

// Library-wide defaults. Everything that compares floating point values
// against a threshold reads one of these.
namespace tol {
inline constexpr double kRelative = 1e-12;
inline constexpr double kAbsoluteFloor = 1e-15;
inline constexpr double kParallel = 1e-12;      // normalized cross product
inline constexpr double kUnitLength = 1e-14;
inline constexpr double kArcSum = 1e-10;        // accepted drift of the arc sum on input
inline constexpr double kMorphSlack = 1e-12;    // t outside the feasible interval
inline constexpr double kSquare = 1e-9;
inline constexpr double kCyclic = 1e-9;         // cyclicity certificate on angle sums
inline constexpr double kPerpendicular = 1e-9;  // |diag_angle - pi/2|
inline constexpr double kGenericParallel = 1e-9;
inline constexpr double kDegenerateSlope = 1e-9;
inline constexpr double kPhiRatioSlack = 1e-9;  // 3/2 growth bound slack
inline constexpr double kBrahmagupta = 1e-10;
inline constexpr double kInvariance = 1e-12;
inline constexpr double kFiberFit = 1e-9;       // approximate interpolation
inline constexpr double kRoundTrip = 1e-9;
}  // namespace tol

/// Runtime tolerance table, seeded from the defaults above. Names are the
/// ones accepted by `--tol name=value` on the command line.
class Tolerances {
 public:
  Tolerances();

  double get(const std::string& name) const;
  /// Throws std::invalid_argument for unknown names or non-positive values.
  void set(const std::string& name, double value);
  bool contains(const std::string& name) const;
  std::vector<std::string> names() const;

  double square() const { return get("square"); }
  double brahmagupta() const { return get("brahmagupta"); }
  double invariance() const { return get("invariance"); }
  double phi_ratio_slack() const { return get("phi_ratio_slack"); }
  double fiber_fit() const { return get("fiber_fit"); }
  double round_trip() const { return get("round_trip"); }
  double perpendicular() const { return get("perpendicular"); }

 private:
  std::map<std::string, double> values_;
};

}  // namespace quadlab
