// Minimal static SVG line charts: axes with ticks, a few polyline series,
// optional vertical markers and log-log scaling. No charting dependency.

#ifndef BOUNCER_SVG_HPP
#define BOUNCER_SVG_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace bouncer {

struct SvgSeries {
    std::vector<std::pair<double, double>> points;
    std::string color = "#1f77b4";
    std::string label;
    bool dashed = false;
};

struct SvgChartOptions {
    int width = 720;
    int height = 480;
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = false;
    bool log_y = false;
    std::vector<double> vertical_markers;  // dashed vertical lines at x
    double y_clip = std::numeric_limits<double>::infinity();
    std::string comment;                   // emitted as an SVG comment, may be empty
};

namespace svg_detail {

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

inline double tx(double v, bool log_scale) {
    return log_scale ? std::log10(std::max(v, 1e-300)) : v;
}

}  // namespace svg_detail

inline void write_line_chart(std::ostream& out,
                             const std::vector<SvgSeries>& series,
                             const SvgChartOptions& opt = {}) {
    using svg_detail::num;
    using svg_detail::tx;

    double xmin = 1e308, xmax = -1e308, ymin = 1e308, ymax = -1e308;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) {
            const double yy = std::min(y, opt.y_clip);
            xmin = std::min(xmin, tx(x, opt.log_x));
            xmax = std::max(xmax, tx(x, opt.log_x));
            ymin = std::min(ymin, tx(yy, opt.log_y));
            ymax = std::max(ymax, tx(yy, opt.log_y));
        }
    }
    if (!(xmax > xmin)) xmax = xmin + 1.0;
    if (!(ymax > ymin)) ymax = ymin + 1.0;
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    const double ml = 70, mr = 20, mt = opt.title.empty() ? 20 : 40, mb = 50;
    const double pw = opt.width - ml - mr;
    const double ph = opt.height - mt - mb;
    auto px = [&](double x) { return ml + (tx(x, opt.log_x) - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double y) {
        const double yy = tx(std::min(y, opt.y_clip), opt.log_y);
        return mt + (ymax - yy) / (ymax - ymin) * ph;
    };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.width
        << "\" height=\"" << opt.height << "\">\n";
    if (!opt.comment.empty()) out << "<!-- " << opt.comment << " -->\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!opt.title.empty())
        out << "<text x=\"" << opt.width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
            << "font-family=\"sans-serif\" font-size=\"16\">" << opt.title << "</text>\n";

    // axes
    out << "<line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw
        << "\" y2=\"" << mt + ph << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml
        << "\" y2=\"" << mt + ph << "\" stroke=\"black\"/>\n";

    const int nticks = 5;
    for (int i = 0; i <= nticks; ++i) {
        const double fx = xmin + (xmax - xmin) * i / nticks;
        const double fy = ymin + (ymax - ymin) * i / nticks;
        const double gx = ml + pw * i / nticks;
        const double gy = mt + ph - ph * i / nticks;
        const double lx = opt.log_x ? std::pow(10.0, fx) : fx;
        const double ly = opt.log_y ? std::pow(10.0, fy) : fy;
        out << "<line x1=\"" << gx << "\" y1=\"" << mt + ph << "\" x2=\"" << gx
            << "\" y2=\"" << mt + ph + 5 << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << gx << "\" y=\"" << mt + ph + 18
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << num(lx) << "</text>\n";
        out << "<line x1=\"" << ml - 5 << "\" y1=\"" << gy << "\" x2=\"" << ml
            << "\" y2=\"" << gy << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << ml - 8 << "\" y=\"" << gy + 4
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << num(ly) << "</text>\n";
    }
    if (!opt.x_label.empty())
        out << "<text x=\"" << ml + pw / 2 << "\" y=\"" << opt.height - 10
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
            << opt.x_label << "</text>\n";
    if (!opt.y_label.empty())
        out << "<text x=\"16\" y=\"" << mt + ph / 2
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
            << "transform=\"rotate(-90 16 " << mt + ph / 2 << ")\">" << opt.y_label
            << "</text>\n";

    for (double marker : opt.vertical_markers) {
        out << "<line x1=\"" << px(marker) << "\" y1=\"" << mt << "\" x2=\""
            << px(marker) << "\" y2=\"" << mt + ph
            << "\" stroke=\"black\" stroke-dasharray=\"6,4\"/>\n";
    }

    for (const auto& s : series) {
        out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\"";
        if (s.dashed) out << " stroke-dasharray=\"8,5\"";
        out << " points=\"";
        for (const auto& [x, y] : s.points)
            out << num(px(x)) << ',' << num(py(y)) << ' ';
        out << "\"/>\n";
    }

    // legend
    double ly = mt + 14;
    for (const auto& s : series) {
        if (s.label.empty()) continue;
        out << "<line x1=\"" << ml + pw - 150 << "\" y1=\"" << ly << "\" x2=\""
            << ml + pw - 120 << "\" y2=\"" << ly << "\" stroke=\"" << s.color
            << "\" stroke-width=\"2\"" << (s.dashed ? " stroke-dasharray=\"8,5\"" : "")
            << "/>\n";
        out << "<text x=\"" << ml + pw - 112 << "\" y=\"" << ly + 4
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << s.label
            << "</text>\n";
        ly += 18;
    }
    out << "</svg>\n";
}

}  // namespace bouncer

#endif  // BOUNCER_SVG_HPP
