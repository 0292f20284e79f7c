#pragma once

// Polygon text format: `(x1,y1);(x2,y2);...`, coordinates `int` or
// `int/posint`, whitespace ignored.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "qpc/geometry.hpp"

namespace qpc {

inline std::vector<Point> parse_points(std::string_view text, std::size_t line = 0) {
    std::vector<Point> pts;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(std::string("expected '") + c + "'", pos, line);
        ++pos;
    };
    auto field = [&](char stop) {
        std::size_t start = pos;
        while (pos < text.size() && text[pos] != stop && text[pos] != ')' && text[pos] != ';' && text[pos] != '(') ++pos;
        if (pos >= text.size() || text[pos] != stop)
            throw ParseError(std::string("expected '") + stop + "'", pos, line);
        try {
            return parse_rational(text.substr(start, pos - start), start);
        } catch (const ParseError& e) {
            throw ParseError("malformed coordinate", e.offset(), line);
        }
    };
    skip_ws();
    while (pos < text.size()) {
        expect('(');
        Rational x = field(',');
        ++pos;
        Rational y = field(')');
        ++pos;
        pts.emplace_back(std::move(x), std::move(y));
        skip_ws();
        if (pos < text.size()) {
            expect(';');
            skip_ws();
        }
    }
    return pts;
}

/// Parses and normalizes. Throws ParseError or DegenerateInput.
inline ConvexPolygon parse_polygon(std::string_view text, std::size_t line = 0) {
    auto pts = parse_points(text, line);
    if (pts.size() < 3) throw DegenerateInput("polygon needs at least 3 points");
    return convex_hull(std::move(pts));
}

inline std::string format_point(const Point& p) { return "(" + to_string(p.x) + "," + to_string(p.y) + ")"; }

inline std::string format_polygon(const ConvexPolygon& P) {
    std::string s;
    for (std::size_t k = 0; k < P.size(); ++k) {
        if (k) s += ';';
        s += format_point(P[k]);
    }
    return s;
}

}  // namespace qpc
