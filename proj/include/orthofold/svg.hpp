#pragma once

#include <string>

#include "orthofold/io.hpp"

namespace orthofold::io {

// Stroke colors and widths; docs/formats.md lists the values.
namespace svg_style {
inline constexpr const char* kCut = "#00a000";
inline constexpr const char* kMountain = "#d62728";
inline constexpr const char* kValley = "#1f77b4";
inline constexpr const char* kUnsigned = "#9467bd";
inline constexpr const char* kHole = "#000000";
inline constexpr double kCutWidth = 0.01;    // times the longer paper side
inline constexpr double kCreaseWidth = 0.003;
inline constexpr double kDotRadius = 0.012;
inline constexpr double kStripHeight = 0.1;  // 1D strips, times the domain length
}  // namespace svg_style

// Renders the instance, and the crease pattern of `solution` if it is given
// and solvable. 2D documents use the paper rectangle as viewBox with y up;
// 1D documents become a horizontal strip with dots.
std::string render_svg(const InstanceDocument& instance, const SolutionDocument* solution = nullptr);

}  // namespace orthofold::io
