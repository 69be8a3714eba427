#pragma once

#include "orchard/crossings.hpp"
#include "orchard/drawing.hpp"
#include "orchard/json_io.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

namespace orchard {

struct SvgOptions {
    double size = 640;        // canvas width/height in px
    bool show_lines = false;  // draw every generating line, mark crossings
    bool labels = true;
};

namespace detail {

struct Frame {
    double min_x, min_y, scale, size;

    double sx(const Rational& x) const { return (rational_to_double(x) - min_x) * scale; }
    double sy(const Rational& y) const { return size - (rational_to_double(y) - min_y) * scale; }
};

inline std::string fmt(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << v;
    return os.str();
}

} // namespace detail

/// Renders the drawing as standalone SVG 1.1. Coordinates are converted
/// to decimals for display only; the exact drawing JSON rides along in a
/// comment so the picture is losslessly recoverable.
inline std::string svg_export(const Drawing& d, const SvgOptions& opt = {}) {
    double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
    if (!d.placement.empty()) {
        min_x = max_x = rational_to_double(d.placement[0].x);
        min_y = max_y = rational_to_double(d.placement[0].y);
        for (const Point& p : d.placement) {
            min_x = std::min(min_x, rational_to_double(p.x));
            max_x = std::max(max_x, rational_to_double(p.x));
            min_y = std::min(min_y, rational_to_double(p.y));
            max_y = std::max(max_y, rational_to_double(p.y));
        }
    }
    const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
    const double margin = 0.08 * span;
    detail::Frame f{min_x - margin, min_y - margin, opt.size / (span + 2 * margin), opt.size};

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opt.size
       << "\" height=\"" << opt.size << "\" viewBox=\"0 0 " << opt.size << " " << opt.size
       << "\">\n";
    os << "<!-- exact drawing: " << drawing_to_json(d).dump() << " -->\n";

    const int n = d.graph.vertex_count;
    if (opt.show_lines) {
        // Generating lines, clipped generously; crossing marks where a
        // line meets an open edge segment.
        os << "<g stroke=\"#bbbbbb\" stroke-width=\"0.5\">\n";
        const double reach = 4 * opt.size;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                const double x1 = f.sx(d.placement[u].x), y1 = f.sy(d.placement[u].y);
                const double x2 = f.sx(d.placement[v].x), y2 = f.sy(d.placement[v].y);
                const double dx = x2 - x1, dy = y2 - y1;
                const double len = std::max(std::sqrt(dx * dx + dy * dy), 1e-9);
                os << "<line x1=\"" << detail::fmt(x1 - dx / len * reach) << "\" y1=\""
                   << detail::fmt(y1 - dy / len * reach) << "\" x2=\""
                   << detail::fmt(x2 + dx / len * reach) << "\" y2=\""
                   << detail::fmt(y2 + dy / len * reach) << "\"/>\n";
            }
        }
        os << "</g>\n";
    }

    os << "<g stroke=\"#1f3a93\" stroke-width=\"2\" stroke-linecap=\"round\">\n";
    for (const Edge& e : d.graph.edges) {
        os << "<line x1=\"" << detail::fmt(f.sx(d.placement[e.first].x)) << "\" y1=\""
           << detail::fmt(f.sy(d.placement[e.first].y)) << "\" x2=\""
           << detail::fmt(f.sx(d.placement[e.second].x)) << "\" y2=\""
           << detail::fmt(f.sy(d.placement[e.second].y)) << "\"/>\n";
    }
    os << "</g>\n";

    if (opt.show_lines) {
        // Exact crossing points, rendered after the edges so they sit on top.
        os << "<g fill=\"#d91e18\">\n";
        for (const Edge& e : d.graph.edges) {
            const Point& s = d.placement[e.first];
            const Point& t = d.placement[e.second];
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    if (u == e.first || u == e.second || v == e.first || v == e.second) continue;
                    const Point& a = d.placement[u];
                    const Point& b = d.placement[v];
                    if (!strictly_separates(a, b, s, t)) continue;
                    const Rational ds = (b.x - a.x) * (s.y - a.y) - (b.y - a.y) * (s.x - a.x);
                    const Rational dt = (b.x - a.x) * (t.y - a.y) - (b.y - a.y) * (t.x - a.x);
                    const Rational lambda = ds / (ds - dt); // in (0,1): opposite signs
                    const Point c{s.x + lambda * (t.x - s.x), s.y + lambda * (t.y - s.y)};
                    os << "<circle cx=\"" << detail::fmt(f.sx(c.x)) << "\" cy=\""
                       << detail::fmt(f.sy(c.y)) << "\" r=\"3\"/>\n";
                }
            }
        }
        os << "</g>\n";
    }

    os << "<g fill=\"#111111\">\n";
    for (int v = 0; v < n; ++v) {
        os << "<circle cx=\"" << detail::fmt(f.sx(d.placement[v].x)) << "\" cy=\""
           << detail::fmt(f.sy(d.placement[v].y)) << "\" r=\"4\"/>\n";
        if (opt.labels)
            os << "<text x=\"" << detail::fmt(f.sx(d.placement[v].x) + 6) << "\" y=\""
               << detail::fmt(f.sy(d.placement[v].y) - 6) << "\" font-size=\"12\">" << v
               << "</text>\n";
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

} // namespace orchard
