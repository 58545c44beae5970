#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "ylab/analysis.hpp"
#include "ylab/instance.hpp"
#include "ylab/io.hpp"

namespace ylab {

/// Renders a tour as SVG: one circle per point, one line per tour edge,
/// crossing locations highlighted when supplied. Illustration only — nothing
/// in the library treats the rendering as evidence of anything.
inline std::string render_tour_svg(const Instance& inst, const Tour& t,
                                   const std::vector<Crossing>& crossings = {}) {
    const auto& pts = inst.coords();
    double min_x = pts[0].x, max_x = pts[0].x, min_y = pts[0].y, max_y = pts[0].y;
    for (const Point& p : pts) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
    const double margin = 0.06 * span;
    const double view = span + 2 * margin;
    const double stroke = span / 200.0;
    const double radius = span / 80.0;

    // flip y so larger coordinates render upward
    auto sx = [&](double x) { return x - min_x + margin; };
    auto sy = [&](double y) { return (max_y - y) + margin; };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" viewBox=\"0 0 "
        << format_double(view) << " " << format_double(view) << "\">\n";
    out << "  <title>" << (inst.name().empty() ? "tour" : inst.name()) << "</title>\n";

    const int m = t.size();
    for (int k = 0; k < m; ++k) {
        const Point a = pts[static_cast<std::size_t>(t.order[static_cast<std::size_t>(k)])];
        const Point b = pts[static_cast<std::size_t>(t.order[static_cast<std::size_t>((k + 1) % m)])];
        out << "  <line class=\"seg\" x1=\"" << format_double(sx(a.x)) << "\" y1=\""
            << format_double(sy(a.y)) << "\" x2=\"" << format_double(sx(b.x)) << "\" y2=\""
            << format_double(sy(b.y)) << "\" stroke=\"#1f4e79\" stroke-width=\""
            << format_double(stroke) << "\"/>\n";
    }
    for (const Point& p : pts) {
        out << "  <circle class=\"pt\" cx=\"" << format_double(sx(p.x)) << "\" cy=\""
            << format_double(sy(p.y)) << "\" r=\"" << format_double(radius)
            << "\" fill=\"#222222\"/>\n";
    }
    for (const Crossing& c : crossings) {
        out << "  <circle class=\"crossing\" cx=\"" << format_double(sx(c.where.x)) << "\" cy=\""
            << format_double(sy(c.where.y)) << "\" r=\"" << format_double(1.8 * radius)
            << "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"" << format_double(stroke)
            << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace ylab
