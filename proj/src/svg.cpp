#include "addiword/svg.hpp"

#include <algorithm>

namespace addiword {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kMargin = 40.0;

}  // namespace

void write_path_svg(std::ostream& out, const std::vector<LatticePoint>& points,
                    const std::vector<std::size_t>& chosen) {
    double x_lo = 0, x_hi = 1, y_lo = 0, y_hi = 1;
    if (!points.empty()) {
        x_lo = static_cast<double>(points.front().index);
        x_hi = static_cast<double>(points.back().index);
        auto [mn, mx] = std::minmax_element(
            points.begin(), points.end(),
            [](const LatticePoint& a, const LatticePoint& b) { return a.ordinate < b.ordinate; });
        y_lo = static_cast<double>(mn->ordinate);
        y_hi = static_cast<double>(mx->ordinate);
    }
    if (x_hi <= x_lo) x_hi = x_lo + 1;
    if (y_hi <= y_lo) y_hi = y_lo + 1;

    const double sx = (kWidth - 2 * kMargin) / (x_hi - x_lo);
    const double sy = (kHeight - 2 * kMargin) / (y_hi - y_lo);
    const auto px = [&](const LatticePoint& p) {
        return kMargin + (static_cast<double>(p.index) - x_lo) * sx;
    };
    const auto py = [&](const LatticePoint& p) {
        // SVG y grows downward.
        return kHeight - kMargin - (static_cast<double>(p.ordinate) - y_lo) * sy;
    };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << kWidth << ' ' << kHeight
        << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "  <polyline fill=\"none\" stroke=\"#3465a4\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i) out << ' ';
        out << px(points[i]) << ',' << py(points[i]);
    }
    out << "\"/>\n";
    for (std::size_t idx : chosen) {
        if (idx >= points.size()) continue;
        out << "  <circle cx=\"" << px(points[idx]) << "\" cy=\"" << py(points[idx])
            << "\" r=\"6\" fill=\"none\" stroke=\"#cc0000\" stroke-width=\"2\"/>\n";
    }
    out << "</svg>\n";
}

}  // namespace addiword
