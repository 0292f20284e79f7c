#pragma once

// Machine-integer lattice polygons. This is the fast path used by the
// enumerators and by canonical forms; the exact rational API in geometry.hpp
// is the reference it is tested against.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <tuple>
#include <vector>

#include "qpc/errors.hpp"

namespace qpc::lat {

using i64 = std::int64_t;
using i128 = __int128;

struct IPt {
    i64 x = 0;
    i64 y = 0;
    auto operator<=>(const IPt&) const = default;
    friend IPt operator+(IPt a, IPt b) { return {a.x + b.x, a.y + b.y}; }
    friend IPt operator-(IPt a, IPt b) { return {a.x - b.x, a.y - b.y}; }
};

/// Counterclockwise, minimal vertex list.
using Poly = std::vector<IPt>;

inline i64 cross(IPt o, IPt a, IPt b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

template <typename T>
T floor_div(T a, T b) {
    T q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

template <typename T>
T ceil_div(T a, T b) {
    return -floor_div<T>(-a, b);
}

inline i64 mod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

inline i64 gcd(i64 a, i64 b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0.
inline std::tuple<i64, i64, i64> ext_gcd(i64 a, i64 b) {
    i64 s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        i64 q = a / b;
        std::tie(a, b) = std::make_tuple(b, a - q * b);
        std::tie(s0, s1) = std::make_tuple(s1, s0 - q * s1);
        std::tie(t0, t1) = std::make_tuple(t1, t0 - q * t1);
    }
    if (a < 0) return {-a, -s0, -t0};
    return {a, s0, t0};
}

/// Convex hull with collinear points dropped, rotated to start at the lowest
/// (then leftmost) vertex. Degenerate inputs give fewer than 3 vertices.
inline Poly hull(std::vector<IPt> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    Poly h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
        h[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    if (h.size() < 3) return h;
    auto first = std::min_element(h.begin(), h.end(), [](IPt a, IPt b) { return a.y < b.y || (a.y == b.y && a.x < b.x); });
    std::rotate(h.begin(), first, h.end());
    return h;
}

inline i64 twice_area(const Poly& P) {
    i64 s = 0;
    for (std::size_t k = 0; k < P.size(); ++k) {
        const auto& a = P[k];
        const auto& b = P[(k + 1) % P.size()];
        s += a.x * b.y - a.y * b.x;
    }
    return s;
}

inline i64 boundary_points(const Poly& P) {
    i64 b = 0;
    for (std::size_t k = 0; k < P.size(); ++k) {
        auto d = P[(k + 1) % P.size()] - P[k];
        b += gcd(d.x, d.y);
    }
    return b;
}

/// Pick's formula, valid for lattice polygons.
inline i64 interior_points(const Poly& P) { return (twice_area(P) - boundary_points(P) + 2) / 2; }

inline i64 lattice_point_count(const Poly& P) { return interior_points(P) + boundary_points(P); }

/// Half-plane a*x + b*y <= c.
struct Ineq {
    i64 a, b, c;
    bool holds(IPt p) const { return a * p.x + b * p.y <= c; }
};

/// Edge inequalities with primitive outward normals.
inline std::vector<Ineq> inequalities(const Poly& P) {
    std::vector<Ineq> out;
    out.reserve(P.size());
    for (std::size_t k = 0; k < P.size(); ++k) {
        auto a = P[k];
        auto d = P[(k + 1) % P.size()] - a;
        i64 g = gcd(d.x, d.y);
        i64 nx = d.y / g, ny = -d.x / g;
        out.push_back({nx, ny, nx * a.x + ny * a.y});
    }
    return out;
}

inline bool strictly_inside(const Poly& P, IPt p) {
    for (std::size_t k = 0; k < P.size(); ++k)
        if (cross(P[k], P[(k + 1) % P.size()], p) <= 0) return false;
    return true;
}

inline bool contains(const Poly& P, IPt p) {
    for (std::size_t k = 0; k < P.size(); ++k)
        if (cross(P[k], P[(k + 1) % P.size()], p) < 0) return false;
    return true;
}

/// Lattice points of a bounded intersection of half-planes, scanning rows
/// ylo..yhi.
inline std::vector<IPt> points_in_rows(const std::vector<Ineq>& H, i64 ylo, i64 yhi) {
    std::vector<IPt> out;
    for (i64 y = ylo; y <= yhi; ++y) {
        i64 lo = std::numeric_limits<i64>::min(), hi = std::numeric_limits<i64>::max();
        bool empty = false;
        for (const auto& h : H) {
            i64 rhs = h.c - h.b * y;
            if (h.a > 0)
                hi = std::min(hi, floor_div(rhs, h.a));
            else if (h.a < 0)
                lo = std::max(lo, ceil_div(rhs, h.a));
            else if (rhs < 0)
                empty = true;
        }
        if (empty || lo > hi) continue;
        if (lo == std::numeric_limits<i64>::min() || hi == std::numeric_limits<i64>::max())
            throw PreconditionViolated("half-plane system is unbounded");
        for (i64 x = lo; x <= hi; ++x) out.push_back({x, y});
    }
    return out;
}

/// Vertical extent [floor(ymin), ceil(ymax)] of a bounded half-plane system,
/// from all feasible pairwise line intersections. Empty when infeasible.
inline std::optional<std::pair<i64, i64>> vertical_extent(const std::vector<Ineq>& H) {
    std::optional<std::pair<i64, i64>> ext;
    for (std::size_t p = 0; p < H.size(); ++p) {
        for (std::size_t q = p + 1; q < H.size(); ++q) {
            i128 det = i128(H[p].a) * H[q].b - i128(H[p].b) * H[q].a;
            if (det == 0) continue;
            i128 X = i128(H[p].c) * H[q].b - i128(H[q].c) * H[p].b;
            i128 Y = i128(H[p].a) * H[q].c - i128(H[q].a) * H[p].c;
            if (det < 0) det = -det, X = -X, Y = -Y;
            bool ok = true;
            for (const auto& h : H)
                if (i128(h.a) * X + i128(h.b) * Y > i128(h.c) * det) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            i64 lo = static_cast<i64>(floor_div<i128>(Y, det));
            i64 hi = static_cast<i64>(ceil_div<i128>(Y, det));
            if (!ext)
                ext = {lo, hi};
            else
                ext = std::pair{std::min(ext->first, lo), std::max(ext->second, hi)};
        }
    }
    return ext;
}

inline std::vector<IPt> points_in(const std::vector<Ineq>& H) {
    auto ext = vertical_extent(H);
    if (!ext) return {};
    return points_in_rows(H, ext->first, ext->second);
}

inline std::vector<IPt> lattice_points(const Poly& P) {
    i64 ylo = P[0].y, yhi = P[0].y;
    for (auto v : P) ylo = std::min(ylo, v.y), yhi = std::max(yhi, v.y);
    return points_in_rows(inequalities(P), ylo, yhi);
}

/// Lattice points of the polygon obtained by moving every edge of P outward
/// by lattice distance 1.
inline std::vector<IPt> moved_out_points(const Poly& P) {
    auto H = inequalities(P);
    for (auto& h : H) h.c += 1;
    return points_in(H);
}

/// Affine map x -> A x + t on Z^2.
struct Affine {
    i64 a11 = 1, a12 = 0, a21 = 0, a22 = 1;
    i64 t1 = 0, t2 = 0;
    IPt operator()(IPt p) const { return {a11 * p.x + a12 * p.y + t1, a21 * p.x + a22 * p.y + t2}; }
    i64 det() const { return a11 * a22 - a12 * a21; }
};

struct Canonical {
    /// Vertex sequence of the canonical image, starting at the normalizing
    /// vertex. Equal keys characterize equivalent polygons.
    Poly key;
    /// Map on the input coordinates producing the image; translations lie in
    /// d*Z^2.
    Affine map;
};

/// Canonical representative of P under x -> A x + t with A in GL(2,Z) and
/// t in d*Z^2. For each edge and orientation the edge direction goes to
/// (1, 0), the polygon into the upper half-plane, the preceding vertex into
/// the cone 0 <= x < y, and the edge start into [0, d)^2; the
/// lexicographically least vertex sequence wins.
inline Canonical canonical(const Poly& V, i64 d = 1) {
    const std::size_t n = V.size();
    Canonical best;
    bool have = false;
    Poly cand(n);
    for (int reflect = 0; reflect < 2; ++reflect) {
        Poly W = V;
        if (reflect) {
            for (auto& p : W) std::swap(p.x, p.y);
            std::reverse(W.begin(), W.end());
        }
        for (std::size_t k = 0; k < n; ++k) {
            IPt a = W[k];
            IPt u = W[(k + 1) % n] - a;
            i64 g = gcd(u.x, u.y);
            u.x /= g;
            u.y /= g;
            auto [one, s, t] = ext_gcd(u.x, u.y);
            i64 m11 = s, m12 = t, m21 = -u.y, m22 = u.x;
            IPt w = W[(k + n - 1) % n] - a;
            i64 px = m11 * w.x + m12 * w.y, py = m21 * w.x + m22 * w.y;
            i64 sh = -floor_div(px, py);
            m11 += sh * m21;
            m12 += sh * m22;
            i64 ax = m11 * a.x + m12 * a.y, ay = m21 * a.x + m22 * a.y;
            i64 r1 = mod(ax, d), r2 = mod(ay, d);

            bool better = !have;
            bool decided = !have;
            for (std::size_t j = 0; j < n; ++j) {
                IPt q = W[(k + j) % n] - a;
                cand[j] = {m11 * q.x + m12 * q.y + r1, m21 * q.x + m22 * q.y + r2};
                if (!decided) {
                    if (cand[j] < best.key[j]) {
                        better = decided = true;
                    } else if (best.key[j] < cand[j]) {
                        decided = true;
                        break;
                    }
                }
            }
            if (!better) continue;
            best.key = cand;
            Affine M{m11, m12, m21, m22, r1 - ax, r2 - ay};
            if (reflect) std::swap(M.a11, M.a12), std::swap(M.a21, M.a22);
            best.map = M;
            have = true;
        }
    }
    return best;
}

inline Poly canonical_key(const Poly& V) { return canonical(V, 1).key; }

/// The canonical key read back as a polygon in standard vertex order.
inline Poly key_polygon(const Poly& key) { return hull(key); }

}  // namespace qpc::lat
