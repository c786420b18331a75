#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "csv_io.hpp"

namespace ifs_cli {

// Minimal hand-emitted scatter plot: one dot series and one cross series
// over a shared abscissa.  No plotting dependency; the output is a small
// standalone SVG document.
inline std::string svg_scatter(const std::vector<double>& xs, const std::vector<double>& dots,
                               const std::vector<double>& crosses, const std::string& title) {
    const double width = 640.0, height = 420.0, pad = 48.0;
    double lo = 1e300, hi = -1e300;
    for (double v : dots) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    for (double v : crosses) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (!(hi > lo)) {
        lo -= 1.0;
        hi += 1.0;
    }
    const double x0 = xs.front(), x1 = xs.back();
    const auto px = [&](double x) {
        return pad + (x - x0) / std::max(x1 - x0, 1e-12) * (width - 2 * pad);
    };
    const auto py = [&](double y) {
        return height - pad - (y - lo) / (hi - lo) * (height - 2 * pad);
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"420\">\n";
    svg += "<rect width=\"640\" height=\"420\" fill=\"white\"/>\n";
    svg += "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">" + title +
           "</text>\n";
    svg += "<line x1=\"" + format_sig6(pad) + "\" y1=\"" + format_sig6(height - pad) +
           "\" x2=\"" + format_sig6(width - pad) + "\" y2=\"" + format_sig6(height - pad) +
           "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + format_sig6(pad) + "\" y1=\"" + format_sig6(pad) + "\" x2=\"" +
           format_sig6(pad) + "\" y2=\"" + format_sig6(height - pad) +
           "\" stroke=\"black\"/>\n";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        svg += "<circle cx=\"" + format_sig6(px(xs[i])) + "\" cy=\"" +
               format_sig6(py(dots[i])) + "\" r=\"3\" fill=\"black\"/>\n";
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double cx = px(xs[i]), cy = py(crosses[i]);
        svg += "<path d=\"M" + format_sig6(cx - 3) + " " + format_sig6(cy - 3) + " L" +
               format_sig6(cx + 3) + " " + format_sig6(cy + 3) + " M" + format_sig6(cx - 3) +
               " " + format_sig6(cy + 3) + " L" + format_sig6(cx + 3) + " " +
               format_sig6(cy - 3) + "\" stroke=\"crimson\" stroke-width=\"1.5\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace ifs_cli
