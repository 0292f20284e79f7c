#pragma once

// Exact rational plane geometry: points, convex polygons, lattice-point
// counting, dilation, integer hulls and lattice distances.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "qpc/errors.hpp"
#include "qpc/rational.hpp"

namespace qpc {

struct Point {
    Rational x;
    Rational y;

    Point() = default;
    Point(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}
    Point(std::int64_t x_, std::int64_t y_) : x(x_), y(y_) {}

    bool is_lattice() const { return is_integer(x) && is_integer(y); }

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    friend bool operator<(const Point& a, const Point& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }
    friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(const Rational& k, const Point& p) { return {k * p.x, k * p.y}; }
};

inline Rational cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

class ConvexPolygon;
ConvexPolygon convex_hull(std::vector<Point> points);

/// Full-dimensional convex polygon with rational vertices.
///
/// Vertices are minimal, counterclockwise, and start at the vertex with the
/// smallest y (ties: smallest x), so equal polygons have equal vertex lists.
class ConvexPolygon {
public:
    const std::vector<Point>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    const Point& operator[](std::size_t k) const { return vertices_[k]; }
    const Point& vertex(std::ptrdiff_t k) const {
        auto n = static_cast<std::ptrdiff_t>(vertices_.size());
        return vertices_[static_cast<std::size_t>(((k % n) + n) % n)];
    }

    /// Least d >= 1 such that d*P is a lattice polygon.
    const BigInt& denominator() const { return denominator_; }
    bool is_lattice() const { return denominator_ == 1; }

    friend bool operator==(const ConvexPolygon& a, const ConvexPolygon& b) { return a.vertices_ == b.vertices_; }
    friend bool operator!=(const ConvexPolygon& a, const ConvexPolygon& b) { return !(a == b); }
    friend bool operator<(const ConvexPolygon& a, const ConvexPolygon& b) {
        return std::lexicographical_compare(a.vertices_.begin(), a.vertices_.end(), b.vertices_.begin(),
                                            b.vertices_.end());
    }

private:
    explicit ConvexPolygon(std::vector<Point> ccw) : vertices_(std::move(ccw)) {
        auto first = std::min_element(vertices_.begin(), vertices_.end(), [](const Point& a, const Point& b) {
            return a.y < b.y || (a.y == b.y && a.x < b.x);
        });
        std::rotate(vertices_.begin(), first, vertices_.end());
        denominator_ = 1;
        for (const auto& v : vertices_) {
            denominator_ = lcm(denominator_, den(v.x));
            denominator_ = lcm(denominator_, den(v.y));
        }
    }

    std::vector<Point> vertices_;
    BigInt denominator_;

    friend ConvexPolygon convex_hull(std::vector<Point> points);
};

/// Minimal counterclockwise hull. Throws DegenerateInput when the points do
/// not span the plane.
inline ConvexPolygon convex_hull(std::vector<Point> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() < 3) throw DegenerateInput("convex hull needs at least 3 distinct points");

    // Andrew's monotone chain; strict turns drop collinear points.
    std::vector<Point> hull(2 * points.size());
    std::size_t k = 0;
    for (const auto& p : points) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
        hull[k++] = points[i];
    }
    hull.resize(k - 1);
    if (hull.size() < 3) throw DegenerateInput("points are collinear");
    return ConvexPolygon(std::move(hull));
}

inline ConvexPolygon make_polygon(std::initializer_list<Point> pts) { return convex_hull(std::vector<Point>(pts)); }

inline Rational area(const ConvexPolygon& P) {
    Rational twice = 0;
    const auto& v = P.vertices();
    for (std::size_t k = 0; k < v.size(); ++k) {
        const auto& a = v[k];
        const auto& b = v[(k + 1) % v.size()];
        twice += a.x * b.y - a.y * b.x;
    }
    return twice / 2;
}

inline ConvexPolygon dilate(const ConvexPolygon& P, const Rational& k) {
    if (k <= 0) throw PreconditionViolated("dilation factor must be positive");
    std::vector<Point> pts;
    pts.reserve(P.size());
    for (const auto& v : P.vertices()) pts.push_back(k * v);
    return convex_hull(std::move(pts));
}

inline ConvexPolygon translate(const ConvexPolygon& P, const Point& t) {
    std::vector<Point> pts;
    pts.reserve(P.size());
    for (const auto& v : P.vertices()) pts.push_back(v + t);
    return convex_hull(std::move(pts));
}

namespace detail {

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.
inline std::tuple<BigInt, BigInt, BigInt> ext_gcd(BigInt a, BigInt b) {
    BigInt s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        BigInt q = a / b;
        BigInt r = a - q * b;
        a = b;
        b = r;
        BigInt s2 = s0 - q * s1;
        s0 = s1;
        s1 = s2;
        BigInt t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (a < 0) return {-a, -s0, -t0};
    return {a, s0, t0};
}

/// Primitive integer vector parallel to b - a (same orientation).
inline std::pair<BigInt, BigInt> primitive_direction(const Point& a, const Point& b) {
    Rational dx = b.x - a.x, dy = b.y - a.y;
    BigInt scale = lcm(den(dx), den(dy));
    BigInt ix = num(dx * scale), iy = num(dy * scale);
    BigInt g = gcd(abs(ix), abs(iy));
    if (g == 0) throw DegenerateInput("segment endpoints coincide");
    return {ix / g, iy / g};
}

/// Calls fn(y, x_left, x_right) for every integer row y meeting P.
template <typename Fn>
void for_each_row(const ConvexPolygon& P, Fn&& fn) {
    const auto& v = P.vertices();
    Rational ymin = v[0].y, ymax = v[0].y;
    for (const auto& p : v) {
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    for (BigInt y = ceil(ymin); y <= floor(ymax); ++y) {
        Rational yr(y);
        std::optional<Rational> xl, xr;
        for (std::size_t k = 0; k < v.size(); ++k) {
            const auto& a = v[k];
            const auto& b = v[(k + 1) % v.size()];
            auto consider = [&](const Rational& x) {
                if (!xl || x < *xl) xl = x;
                if (!xr || x > *xr) xr = x;
            };
            if (a.y == b.y) {
                if (a.y == yr) {
                    consider(a.x);
                    consider(b.x);
                }
            } else if ((a.y <= yr && yr <= b.y) || (b.y <= yr && yr <= a.y)) {
                consider(a.x + (yr - a.y) * (b.x - a.x) / (b.y - a.y));
            }
        }
        if (xl) fn(y, *xl, *xr);
    }
}

}  // namespace detail

/// Lattice points on the closed segment [a, b].
inline std::int64_t segment_lattice_points(const Point& a, const Point& b) {
    if (a == b) return a.is_lattice() ? 1 : 0;
    auto [dx, dy] = detail::primitive_direction(a, b);
    // Line: dy*x - dx*y = c with (dy, -dx) primitive.
    Rational c = Rational(dy) * a.x - Rational(dx) * a.y;
    if (!is_integer(c)) return 0;
    auto [g, s, t] = detail::ext_gcd(dy, -dx);  // s*dy + t*(-dx) = 1
    BigInt ci = num(c);
    Point p0(Rational(s * ci), Rational(t * ci));
    Rational norm2 = Rational(dx * dx + dy * dy);
    Point dir{Rational(dx), Rational(dy)};
    Rational ta = dot(a - p0, dir) / norm2;
    Rational tb = dot(b - p0, dir) / norm2;
    if (tb < ta) std::swap(ta, tb);
    BigInt lo = ceil(ta), hi = floor(tb);
    return hi < lo ? 0 : to_i64(hi - lo + 1);
}

struct LatticeCounts {
    std::int64_t total = 0;
    std::int64_t interior = 0;
    std::int64_t boundary = 0;

    friend bool operator==(const LatticeCounts&, const LatticeCounts&) = default;
};

/// Row sweep for the total, per-edge gcd counting for the boundary.
namespace detail {

/// sum_{t=0}^{n-1} floor((a t + b) / m) for m > 0, n >= 0.
inline BigInt floor_sum(BigInt n, BigInt m, BigInt a, BigInt b) {
    BigInt ans = 0;
    auto fdiv = [](const BigInt& p, const BigInt& q) { return floor(Rational(p, q)); };
    BigInt qa = fdiv(a, m), qb = fdiv(b, m);
    ans += n * (n - 1) / 2 * qa + n * qb;
    a -= qa * m;
    b -= qb * m;
    for (;;) {
        if (a >= m) {
            ans += n * (n - 1) / 2 * (a / m);
            a %= m;
        }
        if (b >= m) {
            ans += n * (b / m);
            b %= m;
        }
        BigInt y = a * n + b;
        if (y < m) break;
        n = y / m;
        b = y % m;
        std::swap(m, a);
    }
    return ans;
}

/// sum over integer y in [lo, hi] of floor(x(y)), x the line through e0, e1.
inline BigInt edge_floor_sum(const Point& e0, const Point& e1, const BigInt& lo, const BigInt& hi, bool ceiling) {
    if (hi < lo) return 0;
    Rational s = (e1.x - e0.x) / (e1.y - e0.y), c = e0.x - s * e0.y;
    BigInt C = lcm(den(s), den(c));
    BigInt A = num(s * C), B = num(c * C);
    if (ceiling) return -floor_sum(hi - lo + 1, C, -A, -(A * lo + B));
    return floor_sum(hi - lo + 1, C, A, A * lo + B);
}

}  // namespace detail

/// Totals come from floor sums along the two monotone chains, so the cost
/// does not grow with the size of P.
inline LatticeCounts count_lattice_points(const ConvexPolygon& P) {
    LatticeCounts c;
    const auto& v = P.vertices();
    Rational ymin = v[0].y, ymax = v[0].y;
    for (const auto& p : v) ymax = std::max(ymax, p.y);
    BigInt rows_lo = ceil(ymin), rows_hi = floor(ymax);
    if (rows_hi >= rows_lo) {
        BigInt total = rows_hi - rows_lo + 1;
        for (std::size_t k = 0; k < v.size(); ++k) {
            const auto& a = v[k];
            const auto& b = v[(k + 1) % v.size()];
            // half-open in y: each row below the top is counted once per chain
            if (a.y < b.y) total += detail::edge_floor_sum(a, b, ceil(a.y), ceil(b.y) - 1, false);
            if (a.y > b.y) total -= detail::edge_floor_sum(a, b, ceil(b.y), ceil(a.y) - 1, true);
        }
        if (is_integer(ymax)) {
            std::optional<Rational> xl, xr;
            for (const auto& p : v)
                if (p.y == ymax) {
                    if (!xl || p.x < *xl) xl = p.x;
                    if (!xr || p.x > *xr) xr = p.x;
                }
            total += floor(*xr) - ceil(*xl);
        }
        c.total = to_i64(total);
    }
    for (std::size_t k = 0; k < P.size(); ++k) {
        c.boundary += segment_lattice_points(P[k], P[(k + 1) % P.size()]);
        if (P[k].is_lattice()) --c.boundary;
    }
    c.interior = c.total - c.boundary;
    return c;
}

inline std::vector<Point> lattice_points(const ConvexPolygon& P) {
    std::vector<Point> out;
    detail::for_each_row(P, [&](const BigInt& y, const Rational& xl, const Rational& xr) {
        for (BigInt x = ceil(xl); x <= floor(xr); ++x) out.emplace_back(Rational(x), Rational(y));
    });
    return out;
}

/// True when p lies in the topological interior of P.
inline bool strictly_inside(const ConvexPolygon& P, const Point& p) {
    for (std::size_t k = 0; k < P.size(); ++k)
        if (cross(P[k], P[(k + 1) % P.size()], p) <= 0) return false;
    return true;
}

inline bool contains(const ConvexPolygon& P, const Point& p) {
    for (std::size_t k = 0; k < P.size(); ++k)
        if (cross(P[k], P[(k + 1) % P.size()], p) < 0) return false;
    return true;
}

struct LatticeSegmentInfo {
    Point a;
    Point b;
    std::int64_t lattice_points = 0;
    /// Whether the affine hull of the edge contains lattice points.
    bool line_has_lattice_points = false;
    /// Length in units of the primitive lattice vector along the edge.
    Rational lattice_length;
};

inline std::vector<LatticeSegmentInfo> edge_lattice_info(const ConvexPolygon& P) {
    std::vector<LatticeSegmentInfo> out;
    out.reserve(P.size());
    for (std::size_t k = 0; k < P.size(); ++k) {
        const auto& a = P[k];
        const auto& b = P[(k + 1) % P.size()];
        auto [dx, dy] = detail::primitive_direction(a, b);
        Rational c = Rational(dy) * a.x - Rational(dx) * a.y;
        Rational len = dx != 0 ? (b.x - a.x) / Rational(dx) : (b.y - a.y) / Rational(dy);
        out.push_back({a, b, segment_lattice_points(a, b), is_integer(c), len});
    }
    return out;
}

inline bool lattice_point_on_every_edge(const ConvexPolygon& P) {
    for (const auto& e : edge_lattice_info(P))
        if (e.lattice_points == 0) return false;
    return true;
}

/// Lattice distance of p from the rational line through a and b:
/// |<p, n> - c| for the primitive integral normal form <x, n> = c.
inline Rational lattice_distance(const Point& a, const Point& b, const Point& p) {
    if (a == b) throw DegenerateInput("line needs two distinct points");
    auto [dx, dy] = detail::primitive_direction(a, b);
    Rational c = Rational(dy) * a.x - Rational(dx) * a.y;
    Rational v = Rational(dy) * p.x - Rational(dx) * p.y - c;
    return v < 0 ? Rational(-v) : v;
}

/// Primitive outward normal n and offset c of edge k: P lies in <n, x> <= c.
inline std::pair<Point, Rational> edge_inequality(const ConvexPolygon& P, std::size_t k) {
    const auto& a = P[k];
    const auto& b = P[(k + 1) % P.size()];
    auto [dx, dy] = detail::primitive_direction(a, b);
    Point n{Rational(dy), Rational(-dx)};  // right of a counterclockwise edge is outside
    return {n, dot(n, a)};
}

struct EmptyHull {
    friend bool operator==(const EmptyHull&, const EmptyHull&) { return true; }
};

struct Segment {
    Point a;
    Point b;
};

/// conv(P ∩ Z^2): nothing, a point, a segment, or a lattice polygon.
using IntegerHull = std::variant<EmptyHull, Point, Segment, ConvexPolygon>;

inline int dimension(const IntegerHull& h) {
    return static_cast<int>(h.index()) - 1;
}

inline IntegerHull integer_hull(const ConvexPolygon& P) {
    auto pts = lattice_points(P);
    if (pts.empty()) return EmptyHull{};
    if (pts.size() == 1) return pts.front();
    std::sort(pts.begin(), pts.end());
    bool collinear = true;
    for (std::size_t k = 2; k < pts.size() && collinear; ++k)
        if (cross(pts[0], pts[1], pts[k]) != 0) collinear = false;
    if (collinear) return Segment{pts.front(), pts.back()};
    return convex_hull(std::move(pts));
}

/// Both sides of the three integer-hull relations for a non-lattice polygon
/// whose integer hull is two-dimensional. The relations hold for
/// pseudo-integral polygons; the report does not presume that.
struct IntegerHullReport {
    ConvexPolygon hull;
    std::int64_t i_polygon, i_hull, b_polygon, b_hull;
    Rational area_polygon, area_hull;

    bool interior_grows() const { return i_polygon > i_hull; }
    bool boundary_identity() const { return b_polygon == b_hull - (i_polygon - i_hull); }
    bool area_identity() const { return area_polygon == area_hull + Rational(i_polygon - i_hull) / 2; }
    bool all_hold() const { return interior_grows() && boundary_identity() && area_identity(); }
};

inline IntegerHullReport integer_hull_relations(const ConvexPolygon& P) {
    if (P.is_lattice()) throw PreconditionViolated("integer hull relations need a non-lattice polygon");
    auto h = integer_hull(P);
    if (dimension(h) != 2) throw PreconditionViolated("integer hull is not two-dimensional");
    const auto& H = std::get<ConvexPolygon>(h);
    auto cp = count_lattice_points(P);
    auto ch = count_lattice_points(H);
    return {H, cp.interior, ch.interior, cp.boundary, ch.boundary, area(P), area(H)};
}

}  // namespace qpc
