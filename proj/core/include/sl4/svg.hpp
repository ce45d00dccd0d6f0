#pragma once

#include <string>
#include <utility>
#include <vector>

namespace sl4 {

/// Axis labels for an SVG curve.
struct SvgAxes {
    std::string x_label;
    std::string y_label;
};

/// Renders one polyline into a fixed 640x480 SVG 1.1 document. Output bytes
/// are a pure function of the input; requires at least 2 points.
std::string emit_svg_curve(const std::vector<std::pair<double, double>>& points,
                           const SvgAxes& axes);

}  // namespace sl4
