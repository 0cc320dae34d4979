#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "krylov/core/types.hpp"

namespace krylov::experiments {

struct SvgCurve {
    std::string label;
    RealVector x, y;
};

/// Minimal deterministic line plot: axes, ticks, legend, optional log-x.
/// Plain polylines; publication styling is out of scope.
inline std::string svg_plot(const std::string& title, std::vector<SvgCurve> curves,
                            bool log_x = false) {
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf"};
    const double width = 800, height = 500;
    const double ml = 70, mr = 160, mt = 40, mb = 50;

    auto xval = [log_x](double x) { return log_x ? std::log10(std::max(x, 1e-300)) : x; };

    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& c : curves)
        for (Eigen::Index k = 0; k < c.x.size(); ++k) {
            const double xv = xval(c.x(k));
            if (log_x && c.x(k) <= 0.0) continue;
            xmin = std::min(xmin, xv);
            xmax = std::max(xmax, xv);
            ymin = std::min(ymin, c.y(k));
            ymax = std::max(ymax, c.y(k));
        }
    if (xmax <= xmin) xmax = xmin + 1.0;
    if (ymax <= ymin) ymax = ymin + 1.0;

    auto px = [&](double x) { return ml + (xval(x) - xmin) / (xmax - xmin) * (width - ml - mr); };
    auto py = [&](double y) { return height - mb - (y - ymin) / (ymax - ymin) * (height - mt - mb); };
    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.6g", v);
        return std::string(buf);
    };

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" "
         "font-family=\"sans-serif\" font-size=\"12\">\n";
    s += "<rect width=\"800\" height=\"500\" fill=\"white\"/>\n";
    s += "<text x=\"400\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" + title + "</text>\n";
    // axes
    s += "<line x1=\"" + num(ml) + "\" y1=\"" + num(height - mb) + "\" x2=\"" + num(width - mr) +
         "\" y2=\"" + num(height - mb) + "\" stroke=\"black\"/>\n";
    s += "<line x1=\"" + num(ml) + "\" y1=\"" + num(mt) + "\" x2=\"" + num(ml) + "\" y2=\"" +
         num(height - mb) + "\" stroke=\"black\"/>\n";
    for (int t = 0; t <= 5; ++t) {
        const double fx = xmin + t * (xmax - xmin) / 5.0;
        const double fy = ymin + t * (ymax - ymin) / 5.0;
        const double tx = ml + t * (width - ml - mr) / 5.0;
        const double ty = height - mb - t * (height - mt - mb) / 5.0;
        s += "<text x=\"" + num(tx) + "\" y=\"" + num(height - mb + 18) +
             "\" text-anchor=\"middle\">" + (log_x ? ("1e" + num(fx)) : num(fx)) + "</text>\n";
        s += "<text x=\"" + num(ml - 8) + "\" y=\"" + num(ty + 4) + "\" text-anchor=\"end\">" +
             num(fy) + "</text>\n";
    }
    int color = 0;
    for (const auto& c : curves) {
        std::string pts;
        for (Eigen::Index k = 0; k < c.x.size(); ++k) {
            if (log_x && c.x(k) <= 0.0) continue;
            pts += num(px(c.x(k))) + "," + num(py(c.y(k))) + " ";
        }
        const char* col = palette[color % 7];
        s += "<polyline fill=\"none\" stroke=\"" + std::string(col) + "\" points=\"" + pts +
             "\"/>\n";
        const double ly = mt + 18.0 * color;
        s += "<line x1=\"" + num(width - mr + 10) + "\" y1=\"" + num(ly) + "\" x2=\"" +
             num(width - mr + 34) + "\" y2=\"" + num(ly) + "\" stroke=\"" + col + "\"/>\n";
        s += "<text x=\"" + num(width - mr + 40) + "\" y=\"" + num(ly + 4) + "\">" + c.label +
             "</text>\n";
        ++color;
    }
    s += "</svg>\n";
    return s;
}

} // namespace krylov::experiments
