#pragma once

#include "json.hpp"

#include "quadlab/cyclic_quad.hpp"
#include "quadlab/fiber.hpp"
#include "quadlab/reduction.hpp"

namespace quadlab {

using nlohmann::json;

/// Exact scalars become "p/q" strings, approximate ones plain numbers.
json to_json(const Scalar& s);

/// {"D": number, "theta0": number, "arcs": [4 numbers]}
json to_json(const CircleQuad& q);

/// Accepts "D" as a number or a "p/q" string. Throws std::invalid_argument
/// for a malformed document and BadArcs/BadDiameter for an invalid quad.
CircleQuad circle_quad_from_json(const json& j);

json to_json(const ReductionTrace& trace);
json to_json(const FiberReport& report);

}  // namespace quadlab
