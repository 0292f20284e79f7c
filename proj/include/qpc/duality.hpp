#pragma once

// Polar duals, Hibi's criterion, LDP polygons and Gorenstein index, and the
// boundary-count and stringy area identities for duals of LDP polygons.

#include <optional>
#include <stdexcept>
#include <vector>

#include "qpc/ehrhart.hpp"
#include "qpc/geometry.hpp"

namespace qpc {

inline const Point kOrigin{0, 0};

inline void require_origin_interior(const ConvexPolygon& P) {
    if (!strictly_inside(P, kOrigin)) throw OriginNotInterior("origin is not in the interior");
}

/// P* = {y : <y, x> >= -1 for all x in P}. The edge {<n, x> = c} of P
/// (n primitive outward, c > 0) gives the vertex -n/c.
inline ConvexPolygon dual(const ConvexPolygon& P) {
    require_origin_interior(P);
    std::vector<Point> pts;
    pts.reserve(P.size());
    for (std::size_t k = 0; k < P.size(); ++k) {
        auto [n, c] = edge_inequality(P, k);
        pts.push_back(Point{-n.x / c, -n.y / c});
    }
    return convex_hull(std::move(pts));
}

/// Lattice distances of the edges of P from the origin.
inline std::vector<Rational> edge_distances_from_origin(const ConvexPolygon& P) {
    std::vector<Rational> out;
    for (std::size_t k = 0; k < P.size(); ++k) out.push_back(edge_inequality(P, k).second);
    return out;
}

inline bool is_primitive(const Point& p) {
    return p.is_lattice() && gcd(abs(num(p.x)), abs(num(p.y))) == 1;
}

struct DualPolygonReport {
    ConvexPolygon dual;
    bool is_lattice_dual = false;
    /// Every edge of P at lattice distance 1 from the origin, equivalently
    /// the dual is a lattice polygon with primitive vertices.
    bool is_fano_dual = false;
    /// denom(P) when the dual is Fano.
    std::optional<std::int64_t> gorenstein_index;
};

inline DualPolygonReport dual_report(const ConvexPolygon& P) {
    DualPolygonReport r{dual(P), false, false, std::nullopt};
    r.is_lattice_dual = r.dual.is_lattice();
    r.is_fano_dual = true;
    for (const auto& c : edge_distances_from_origin(P))
        if (c != 1) r.is_fano_dual = false;
    if (r.is_fano_dual) r.gorenstein_index = to_i64(P.denominator());
    return r;
}

struct HibiReport {
    bool dual_is_lattice = false;
    bool distances_are_unit_fractions = false;
    /// l(kP) = i((k+1)P) for k = 0..k_max.
    bool counts_shift = false;
    std::int64_t k_max = 0;
};

/// The three conditions of Hibi's theorem, evaluated independently.
inline HibiReport hibi_conditions(const ConvexPolygon& P, std::int64_t k_max = -1) {
    require_origin_interior(P);
    if (k_max < 0) k_max = 3 * to_i64(P.denominator());
    HibiReport r;
    r.k_max = k_max;
    r.dual_is_lattice = dual(P).is_lattice();
    r.distances_are_unit_fractions = true;
    for (const auto& c : edge_distances_from_origin(P))
        if (num(c) != 1) r.distances_are_unit_fractions = false;
    r.counts_shift = true;
    std::int64_t prev_total = 1;  // l(0P)
    for (std::int64_t k = 0; k <= k_max; ++k) {
        auto next = count_lattice_points(dilate(P, k + 1));
        if (prev_total != next.interior) {
            r.counts_shift = false;
            break;
        }
        prev_total = next.total;
    }
    return r;
}

/// Common value of Hibi's three conditions; disagreement is a logic error.
inline bool hibi_check(const ConvexPolygon& P, std::int64_t k_max = -1) {
    auto r = hibi_conditions(P, k_max);
    if (r.dual_is_lattice != r.distances_are_unit_fractions || r.dual_is_lattice != r.counts_shift)
        throw std::logic_error("Hibi conditions disagree");
    return r.dual_is_lattice;
}

struct LdpReport {
    bool is_ldp = false;
    std::int64_t gorenstein_index = 1;
    explicit operator bool() const { return is_ldp; }
};

/// LDP polygon: lattice, origin interior, primitive vertices. The Gorenstein
/// index is denom(Q*).
inline LdpReport is_ldp(const ConvexPolygon& Q) {
    if (!Q.is_lattice()) throw NotLattice("polygon is not a lattice polygon");
    require_origin_interior(Q);
    LdpReport r;
    r.is_ldp = true;
    for (const auto& v : Q.vertices())
        if (!is_primitive(v)) r.is_ldp = false;
    r.gorenstein_index = to_i64(dual(Q).denominator());
    return r;
}

struct OneInteriorReport {
    bool dual_is_ldp = false;
    bool unit_edge_distances = false;
    bool counts_shift_and_edge_lines = false;
    bool ehrhart_area_area_one = false;
    bool unique_interior_point_and_pseudo_integral = false;

    bool all() const {
        return dual_is_ldp && unit_edge_distances && counts_shift_and_edge_lines && ehrhart_area_area_one &&
               unique_interior_point_and_pseudo_integral;
    }
    bool none() const {
        return !dual_is_ldp && !unit_edge_distances && !counts_shift_and_edge_lines && !ehrhart_area_area_one &&
               !unique_interior_point_and_pseudo_integral;
    }
    bool agree() const { return all() || none(); }
};

/// The five equivalent conditions for a half-integral polygon with the
/// origin in its interior; each is computed on its own. Throws logic_error
/// if they disagree.
inline OneInteriorReport one_interior_pip_dual_theorem(const ConvexPolygon& P, std::int64_t k_max = 6) {
    if (P.denominator() > 2) throw DenominatorTooLarge("denominator exceeds 2");
    require_origin_interior(P);
    OneInteriorReport r;

    auto D = dual(P);
    if (D.is_lattice()) {
        r.dual_is_ldp = true;
        for (const auto& v : D.vertices())
            if (!is_primitive(v)) r.dual_is_ldp = false;
    }

    r.unit_edge_distances = true;
    for (const auto& c : edge_distances_from_origin(P))
        if (c != 1) r.unit_edge_distances = false;

    bool lines = true;
    for (const auto& e : edge_lattice_info(P))
        if (!e.line_has_lattice_points) lines = false;
    r.counts_shift_and_edge_lines = lines && hibi_conditions(P, k_max).counts_shift;

    auto e = ehrhart_half_integral(P);
    Rational A = area(P);
    r.ehrhart_area_area_one = e.is_polynomial() && e.coeffs[0] == std::array<Rational, 3>{1, A, A};

    auto inner = count_lattice_points(P).interior;
    r.unique_interior_point_and_pseudo_integral = inner == 1 && pseudo_integrality(P).is_pseudo_integral;

    if (!r.agree()) throw std::logic_error("one-interior-point conditions disagree");
    return r;
}

struct IdentityReport {
    Rational lhs;
    Rational rhs;
    bool holds() const { return lhs == rhs; }
};

/// b(P) + b(P*) = 12 + (i(P*) - 1) for pseudo-integral P with denominator at
/// most 2 and the origin as its only interior lattice point.
inline IdentityReport boundary_sum_identity(const ConvexPolygon& P) {
    if (P.denominator() > 2) throw PreconditionViolated("denominator exceeds 2");
    if (!strictly_inside(P, kOrigin)) throw PreconditionViolated("origin is not in the interior");
    auto c = count_lattice_points(P);
    if (c.interior != 1) throw PreconditionViolated("origin is not the only interior lattice point");
    if (!pseudo_integrality(P).is_pseudo_integral) throw PreconditionViolated("polygon is not pseudo-integral");
    auto cd = count_lattice_points(dual(P));
    return {Rational(c.boundary + cd.boundary), Rational(12 + (cd.interior - 1))};
}

struct KappaWeight {
    Point l;
    /// -min{lambda >= 0 : l in lambda Q}.
    Rational kappa;
};

/// kappa over all lattice points of a lattice polygon Q with the origin in
/// its interior, via the facet formula lambda = max_F <n_F, l> / c_F.
inline std::vector<KappaWeight> kappa_weights(const ConvexPolygon& Q) {
    require_origin_interior(Q);
    std::vector<std::pair<Point, Rational>> facets;
    for (std::size_t k = 0; k < Q.size(); ++k) facets.push_back(edge_inequality(Q, k));
    std::vector<KappaWeight> out;
    for (const auto& l : lattice_points(Q)) {
        Rational lambda = 0;
        for (const auto& [n, c] : facets) lambda = std::max(lambda, dot(n, l) / c);
        out.push_back({l, -lambda});
    }
    return out;
}

struct StringyReport {
    Rational lhs;
    Rational rhs;
    bool equality_at_12 = false;
    bool reflexive = false;
    bool holds() const { return lhs == rhs; }
};

/// 2(area P + area P*) = 12 sum_{l in P* lattice} (kappa(l) + 1)^2 for P the
/// dual of an LDP polygon.
inline StringyReport stringy_identity(const ConvexPolygon& P) {
    if (!strictly_inside(P, kOrigin)) throw PreconditionViolated("origin is not in the interior");
    auto D = dual(P);
    if (!D.is_lattice()) throw PreconditionViolated("dual is not a lattice polygon");
    for (const auto& v : D.vertices())
        if (!is_primitive(v)) throw PreconditionViolated("dual has an imprimitive vertex");

    StringyReport r;
    r.lhs = 2 * (area(P) + area(D));
    r.rhs = 0;
    for (const auto& w : kappa_weights(D)) {
        // second route: l in lambda P* iff <l, v> >= -lambda for every vertex v of P
        Rational lambda = 0;
        for (const auto& v : P.vertices()) lambda = std::max(lambda, Rational(-dot(w.l, v)));
        if (-lambda != w.kappa) throw std::logic_error("kappa computations disagree");
        Rational s = w.kappa + 1;
        r.rhs += s * s;
    }
    r.rhs *= 12;
    r.equality_at_12 = r.lhs == 12;
    r.reflexive = P.is_lattice() && D.is_lattice();
    return r;
}

}  // namespace qpc
