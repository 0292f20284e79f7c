#pragma once

// Deterministic SVG figures of polygons on the integer grid.

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qpc/geometry.hpp"

namespace qpc {

struct GridBox {
    std::int64_t xmin, ymin, xmax, ymax;
};

struct RenderSpec {
    std::vector<ConvexPolygon> polygons;
    /// Drawn region, widened to contain every vertex. By default the
    /// bounding box of the (laid out) polygons padded by one unit.
    std::optional<GridBox> grid;
    bool highlight_lattice_points = true;
    /// Place polygons left to right, separated by integer translations, on
    /// one shared grid.
    bool row_layout = true;
    int scale = 40;  // pixels per unit
    double stroke_width = 2.0;
    double disk_radius = 4.0;
};

namespace detail {

inline std::string svg_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s(buf);
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    if (s == "-0") s = "0";
    return s;
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace detail

inline std::string render_svg(const RenderSpec& spec) {
    std::vector<ConvexPolygon> placed;
    std::int64_t cursor = 0;
    for (const auto& P : spec.polygons) {
        if (!spec.row_layout) {
            placed.push_back(P);
            continue;
        }
        BigInt lo = floor(P[0].x), hi = ceil(P[0].x);
        for (const auto& v : P.vertices()) lo = std::min(lo, floor(v.x)), hi = std::max(hi, ceil(v.x));
        auto shift = cursor - to_i64(lo);
        placed.push_back(translate(P, Point(shift, 0)));
        cursor += to_i64(hi - lo) + 2;
    }

    GridBox box{0, 0, 1, 1};
    if (!placed.empty()) {
        box = {to_i64(floor(placed[0][0].x)), to_i64(floor(placed[0][0].y)), to_i64(ceil(placed[0][0].x)),
               to_i64(ceil(placed[0][0].y))};
        for (const auto& P : placed)
            for (const auto& v : P.vertices()) {
                box.xmin = std::min(box.xmin, to_i64(floor(v.x)));
                box.ymin = std::min(box.ymin, to_i64(floor(v.y)));
                box.xmax = std::max(box.xmax, to_i64(ceil(v.x)));
                box.ymax = std::max(box.ymax, to_i64(ceil(v.y)));
            }
        box.xmin -= 1, box.ymin -= 1, box.xmax += 1, box.ymax += 1;
    }
    if (spec.grid) {
        // widened if needed so that every vertex stays inside the view box
        const auto& g = *spec.grid;
        if (placed.empty()) box = g;
        else box = {std::min(g.xmin, box.xmin + 1), std::min(g.ymin, box.ymin + 1), std::max(g.xmax, box.xmax - 1),
                    std::max(g.ymax, box.ymax - 1)};
    }

    const double s = spec.scale;
    auto X = [&](double x) { return detail::svg_num((x - box.xmin) * s); };
    auto Y = [&](double y) { return detail::svg_num((box.ymax - y) * s); };
    const auto width = (box.xmax - box.xmin) * spec.scale, height = (box.ymax - box.ymin) * spec.scale;

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    o << "<g stroke=\"#cccccc\" stroke-width=\"1\">\n";
    for (auto x = box.xmin; x <= box.xmax; ++x)
        o << "<line x1=\"" << X(x) << "\" y1=\"0\" x2=\"" << X(x) << "\" y2=\"" << height << "\"/>\n";
    for (auto y = box.ymin; y <= box.ymax; ++y)
        o << "<line x1=\"0\" y1=\"" << Y(y) << "\" x2=\"" << width << "\" y2=\"" << Y(y) << "\"/>\n";
    o << "</g>\n";

    for (const auto& P : placed) {
        o << "<path d=\"";
        for (std::size_t k = 0; k < P.size(); ++k)
            o << (k ? " L " : "M ") << X(detail::to_double(P[k].x)) << ' ' << Y(detail::to_double(P[k].y));
        o << " Z\" fill=\"#4a90d9\" fill-opacity=\"0.25\" stroke=\"#1f4e8c\" stroke-width=\""
          << detail::svg_num(spec.stroke_width) << "\"/>\n";
    }
    if (spec.highlight_lattice_points) {
        for (const auto& P : placed)
            for (const auto& p : lattice_points(P))
                o << "<circle cx=\"" << X(detail::to_double(p.x)) << "\" cy=\"" << Y(detail::to_double(p.y))
                  << "\" r=\"" << detail::svg_num(spec.disk_radius) << "\" fill=\"#000000\"/>\n";
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace qpc
