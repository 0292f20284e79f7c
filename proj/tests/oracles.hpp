#pragma once

// Independent reference implementations used only by the tests. They share
// nothing with the library beyond the Point/ConvexPolygon value types.

#include <random>
#include <vector>

#include "qpc/geometry.hpp"

namespace oracle {

using qpc::BigInt;
using qpc::ConvexPolygon;
using qpc::Point;
using qpc::Rational;

struct Counts {
    long total = 0, interior = 0, boundary = 0;
};

/// Double loop over the bounding box of kP, classifying each lattice point
/// by the signs of the edge cross products. Works on D*kP with D the
/// denominator so the arithmetic stays in machine integers.
inline Counts brute_counts(const ConvexPolygon& P, long k = 1) {
    long D = P.denominator().convert_to<long>();
    std::vector<std::pair<long, long>> W;
    for (const auto& v : P.vertices())
        W.emplace_back(k * (v.x * D).convert_to<long>(), k * (v.y * D).convert_to<long>());
    long x0 = W[0].first, x1 = x0, y0 = W[0].second, y1 = y0;
    for (auto [x, y] : W) x0 = std::min(x0, x), x1 = std::max(x1, x), y0 = std::min(y0, y), y1 = std::max(y1, y);
    auto fl = [D](long a) { return a >= 0 ? a / D : -((-a + D - 1) / D); };
    Counts c;
    for (long x = -fl(-x0); x <= fl(x1); ++x)
        for (long y = -fl(-y0); y <= fl(y1); ++y) {
            long px = x * D, py = y * D;
            bool out = false, on = false;
            for (std::size_t j = 0; j < W.size() && !out; ++j) {
                auto [ax, ay] = W[j];
                auto [bx, by] = W[(j + 1) % W.size()];
                long s = (bx - ax) * (py - ay) - (by - ay) * (px - ax);
                if (s < 0) out = true;
                if (s == 0) on = true;
            }
            if (out) continue;
            ++c.total;
            if (on)
                ++c.boundary;
            else
                ++c.interior;
        }
    return c;
}

/// Random full-dimensional polygon: hull of 3..7 random points with
/// coordinates num/den, |num/den| <= bound, den in 1..max_den.
inline ConvexPolygon random_polygon(std::mt19937_64& rng, long bound, long max_den, bool exact_den = false) {
    std::uniform_int_distribution<long> npts(3, 7), dd(1, max_den);
    for (;;) {
        std::vector<Point> pts;
        long n = npts(rng);
        for (long k = 0; k < n; ++k) {
            long d1 = exact_den ? max_den : dd(rng), d2 = exact_den ? max_den : dd(rng);
            std::uniform_int_distribution<long> c1(-bound * d1, bound * d1), c2(-bound * d2, bound * d2);
            pts.emplace_back(Rational(c1(rng), d1), Rational(c2(rng), d2));
        }
        try {
            auto P = qpc::convex_hull(pts);
            if (exact_den && P.denominator() != max_den) continue;
            return P;
        } catch (const qpc::DegenerateInput&) {
        }
    }
}

}  // namespace oracle
