#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "quadlab/reduction.hpp"

namespace quadlab {

/// One frame: the quad inscribed in the unit circle (its diameter is
/// ignored), sides solid, diagonals dashed, with a caption line.
std::string render_svg(const CircleQuad& q, std::string_view caption);

/// Writes step_000.svg, step_001.svg, ... into `dir`, one per trace step,
/// and returns the paths written.
std::vector<std::filesystem::path> write_trace_svgs(const ReductionTrace& trace, const std::filesystem::path& dir);

}  // namespace quadlab
