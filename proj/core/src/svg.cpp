#include "sl4/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace sl4 {

namespace {

constexpr int kWidth = 640;
constexpr int kHeight = 480;
constexpr double kMargin = 48.0;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c; break;
        }
    }
    return out;
}

}  // namespace

std::string emit_svg_curve(const std::vector<std::pair<double, double>>& points,
                           const SvgAxes& axes) {
    if (points.size() < 2)
        throw std::invalid_argument("emit_svg_curve: need at least 2 points");

    double x_min = points[0].first, x_max = points[0].first;
    double y_min = points[0].second, y_max = points[0].second;
    for (const auto& [x, y] : points) {
        x_min = std::min(x_min, x);
        x_max = std::max(x_max, x);
        y_min = std::min(y_min, y);
        y_max = std::max(y_max, y);
    }
    if (x_max == x_min) x_max = x_min + 1.0;
    if (y_max == y_min) y_max = y_min + 1.0;

    const double sx = (kWidth - 2.0 * kMargin) / (x_max - x_min);
    const double sy = (kHeight - 2.0 * kMargin) / (y_max - y_min);
    auto px = [&](double x) { return kMargin + (x - x_min) * sx; };
    auto py = [&](double y) { return kHeight - kMargin - (y - y_min) * sy; };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
           "viewBox=\"0 0 640 480\" width=\"640\" height=\"480\">\n";
    svg += "  <rect x=\"0\" y=\"0\" width=\"640\" height=\"480\" fill=\"white\"/>\n";

    // frame and zero axes (when zero lies inside the data window)
    svg += "  <rect x=\"" + fmt(kMargin) + "\" y=\"" + fmt(kMargin) + "\" width=\"" +
           fmt(kWidth - 2 * kMargin) + "\" height=\"" + fmt(kHeight - 2 * kMargin) +
           "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    if (x_min < 0.0 && x_max > 0.0)
        svg += "  <line x1=\"" + fmt(px(0)) + "\" y1=\"" + fmt(py(y_min)) + "\" x2=\"" +
               fmt(px(0)) + "\" y2=\"" + fmt(py(y_max)) +
               "\" stroke=\"#888888\" stroke-width=\"0.5\"/>\n";
    if (y_min < 0.0 && y_max > 0.0)
        svg += "  <line x1=\"" + fmt(px(x_min)) + "\" y1=\"" + fmt(py(0)) + "\" x2=\"" +
               fmt(px(x_max)) + "\" y2=\"" + fmt(py(0)) +
               "\" stroke=\"#888888\" stroke-width=\"0.5\"/>\n";

    svg += "  <text x=\"" + fmt(kWidth / 2.0) + "\" y=\"" + fmt(kHeight - 12.0) +
           "\" font-size=\"14\" text-anchor=\"middle\">" + xml_escape(axes.x_label) +
           "</text>\n";
    svg += "  <text x=\"16\" y=\"" + fmt(kHeight / 2.0) +
           "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
           fmt(kHeight / 2.0) + ")\">" + xml_escape(axes.y_label) + "</text>\n";

    svg += "  <polyline fill=\"none\" stroke=\"#1f3d99\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const auto& [x, y] : points) {
        if (!first) svg += " ";
        first = false;
        svg += fmt(px(x)) + "," + fmt(py(y));
    }
    svg += "\"/>\n</svg>\n";
    return svg;
}

}  // namespace sl4
