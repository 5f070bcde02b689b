#include "quadlab/tolerances.hpp"

#include <cmath>
#include <stdexcept>

namespace quadlab {

Tolerances::Tolerances()
    : values_{
          {"relative", tol::kRelative},
          {"absolute_floor", tol::kAbsoluteFloor},
          {"parallel", tol::kParallel},
          {"arc_sum", tol::kArcSum},
          {"morph_slack", tol::kMorphSlack},
          {"square", tol::kSquare},
          {"cyclic", tol::kCyclic},
          {"perpendicular", tol::kPerpendicular},
          {"phi_ratio_slack", tol::kPhiRatioSlack},
          {"brahmagupta", tol::kBrahmagupta},
          {"invariance", tol::kInvariance},
          {"fiber_fit", tol::kFiberFit},
          {"round_trip", tol::kRoundTrip},
      } {}

double Tolerances::get(const std::string& name) const {
  auto it = values_.find(name);
  if (it == values_.end()) throw std::invalid_argument("unknown tolerance '" + name + "'");
  return it->second;
}

void Tolerances::set(const std::string& name, double value) {
  auto it = values_.find(name);
  if (it == values_.end()) throw std::invalid_argument("unknown tolerance '" + name + "'");
  if (!(value > 0.0) || !std::isfinite(value))
    throw std::invalid_argument("tolerance '" + name + "' must be positive and finite");
  it->second = value;
}

bool Tolerances::contains(const std::string& name) const { return values_.count(name) != 0; }

std::vector<std::string> Tolerances::names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : values_) out.push_back(k);
  return out;
}

}  // namespace quadlab
