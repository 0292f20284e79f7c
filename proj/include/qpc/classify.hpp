#pragma once

// Classification pipelines: lattice polygons by (i, b), half-integral
// pseudo-integral polygons by (i, b), the constructive list with one interior
// lattice point, and the extremal classes with b = 2i + 7.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qpc/ehrhart.hpp"
#include "qpc/enumerate.hpp"
#include "qpc/families.hpp"
#include "qpc/unimodular.hpp"

namespace qpc {

enum class Provenance { enumerated, constructive_i1, extremal, family };

inline std::string_view provenance_name(Provenance p) {
    switch (p) {
        case Provenance::enumerated: return "enumerated";
        case Provenance::constructive_i1: return "constructive_i1";
        case Provenance::extremal: return "extremal";
        case Provenance::family: return "family";
    }
    return "?";
}

inline std::optional<Provenance> provenance_from_name(std::string_view s) {
    for (auto p : {Provenance::enumerated, Provenance::constructive_i1, Provenance::extremal, Provenance::family})
        if (provenance_name(p) == s) return p;
    return std::nullopt;
}

struct ClassificationRecord {
    ConvexPolygon polygon;  // canonical representative
    std::int64_t denominator = 1;
    std::int64_t i = 0;
    std::int64_t b = 0;
    Rational area;
    std::array<std::int64_t, 3> period_sequence{1, 1, 1};
    bool pseudo_integral = true;
    Provenance provenance = Provenance::enumerated;

    friend bool operator==(const ClassificationRecord&, const ClassificationRecord&) = default;
};

/// Record for P with every field recomputed from the polygon.
inline ClassificationRecord make_record(const ConvexPolygon& P, Provenance prov) {
    ClassificationRecord r{canonical_form(P).polygon, 1, 0, 0, area(P)};
    r.denominator = to_i64(r.polygon.denominator());
    auto c = count_lattice_points(r.polygon);
    r.i = c.interior;
    r.b = c.boundary;
    r.area = area(r.polygon);
    r.period_sequence = ehrhart_general(r.polygon).period_sequence;
    r.pseudo_integral = r.period_sequence == std::array<std::int64_t, 3>{1, 1, 1};
    r.provenance = prov;
    return r;
}

struct ClassificationResult {
    std::vector<ClassificationRecord> records;  // sorted by polygon
    bool complete = true;
    std::string reason;
    std::uint64_t nodes = 0;

    /// The records, or BudgetExceeded when the search was cut short.
    const std::vector<ClassificationRecord>& value() const& {
        if (!complete) throw BudgetExceeded(reason);
        return records;
    }
    std::vector<ClassificationRecord> value() && {
        if (!complete) throw BudgetExceeded(reason);
        return std::move(records);
    }
};

namespace detail {

inline ConvexPolygon from_scaled(const lat::Poly& V, std::int64_t d) {
    std::vector<Point> pts;
    pts.reserve(V.size());
    for (auto p : V) pts.push_back({make_rational(p.x, d), make_rational(p.y, d)});
    return convex_hull(std::move(pts));
}

inline ClassificationResult finish(std::vector<ConvexPolygon> polys, Provenance prov, const lat::SearchControl* ctl) {
    ClassificationResult res;
    if (ctl) {
        res.nodes = ctl->nodes();
        if (ctl->stopped()) {
            res.complete = false;
            res.reason = ctl->reason();
            return res;
        }
    }
    for (const auto& P : polys) res.records.push_back(make_record(P, prov));
    std::sort(res.records.begin(), res.records.end(),
              [](const auto& a, const auto& b) { return a.polygon < b.polygon; });
    res.records.erase(std::unique(res.records.begin(), res.records.end(),
                                  [](const auto& a, const auto& b) { return a.polygon == b.polygon; }),
                      res.records.end());
    return res;
}

}  // namespace detail

/// Lattice polygons with i interior and b boundary lattice points, up to
/// equivalence.
inline ClassificationResult enumerate_lattice_polygons(std::int64_t i, std::int64_t b,
                                                       const EnumerationBudget& budget = {}) {
    lat::SearchControl ctl(budget);
    std::vector<ConvexPolygon> polys;
    for (const auto& key : lat::polygons_with_counts(i, b, ctl)) polys.push_back(detail::from_scaled(key, 1));
    return detail::finish(std::move(polys), Provenance::enumerated, &ctl);
}

namespace lat {

/// Canonical keys (of the doubled polygon, under translations by 2Z^2) of the
/// half-integral pseudo-integral polygons with (i, b). Every such P has
/// Q = 2P a lattice polygon with (4i + b - 3, 2b); conversely P is one of
/// (Q + t)/2, t in {0,1}^2.
inline std::vector<Poly> half_integral_keys(i64 i, i64 b, SearchControl& ctl) {
    if (i < 0 || b < 2) return {};
    auto Qs = polygons_with_counts(4 * i + b - 3, 2 * b, ctl);
    if (ctl.stopped()) return {};
    const i64 twice_area_Q = 8 * i + 4 * b - 8;
    auto even = [](IPt p) { return mod(p.x, 2) == 0 && mod(p.y, 2) == 0; };
    return parallel_collect<Poly>(Qs.size(), ctl.jobs(), [&](std::size_t k, std::vector<Poly>& out) {
        const Poly& Q = Qs[k];
        if (twice_area(Q) != twice_area_Q) return;
        auto pts = lattice_points(Q);
        for (i64 tx = 0; tx < 2; ++tx)
            for (i64 ty = 0; ty < 2; ++ty) {
                if (!ctl.tick()) return;
                IPt t{tx, ty};
                Poly V;
                for (auto v : Q) V.push_back(v + t);
                bool lattice = std::all_of(V.begin(), V.end(), even);
                if (lattice) continue;
                i64 inner = 0, bound = 0;
                for (auto p : pts) {
                    if (!even(p + t)) continue;
                    (strictly_inside(Q, p) ? inner : bound) += 1;
                }
                if (inner != i || bound != b) continue;
                bool edges = true;
                for (std::size_t e = 0; e < V.size() && edges; ++e) {
                    IPt a = V[e], d = V[(e + 1) % V.size()] - a;
                    i64 g = gcd(d.x, d.y);
                    bool hit = false;
                    for (i64 s = 0; s <= g && !hit; ++s) hit = even({a.x + s * d.x / g, a.y + s * d.y / g});
                    edges = hit;
                }
                if (edges) out.push_back(canonical(V, 2).key);
            }
    });
}

}  // namespace lat

/// Half-integral pseudo-integral polygons with (i, b), up to equivalence.
inline ClassificationResult classify_half_integral_pips(std::int64_t i, std::int64_t b,
                                                        const EnumerationBudget& budget = {}) {
    lat::SearchControl ctl(budget);
    std::vector<ConvexPolygon> polys;
    for (const auto& key : lat::half_integral_keys(i, b, ctl)) polys.push_back(detail::from_scaled(key, 2));
    return detail::finish(std::move(polys), Provenance::enumerated, &ctl);
}

namespace detail {

inline bool one_interior_pip(const ConvexPolygon& P) {
    return P.denominator() == 2 && count_lattice_points(P).interior == 1 && pseudo_integrality(P).is_pseudo_integral;
}

}  // namespace detail

/// The pseudo-integral polygons with denominator 2 and one interior lattice
/// point, built from their integer hull. Either the hull is a segment with
/// three lattice points and P adds one half-integral apex on each side, or
/// the hull H is a hollow lattice polygon with b(P) + 1 boundary points and
/// P = conv(H, v) for a half-integral v at lattice distance 1/2 beyond one
/// edge with three lattice points (and no other edge), or beyond two adjacent
/// edges with two lattice points each.
inline ClassificationResult classify_one_interior() {
    using lat::IPt;
    std::vector<ConvexPolygon> found;
    auto half = [](std::int64_t x2, std::int64_t y2) { return Point(make_rational(x2, 2), make_rational(y2, 2)); };

    for (std::int64_t l = 0; l <= 8; ++l) {
        auto P = make_polygon({Point(0, 1), Point(0, -1), half(1, -2), half(-1, l - 2)});
        if (detail::one_interior_pip(P)) found.push_back(P);
    }

    for (std::int64_t bh = 3; bh <= 10; ++bh) {
        for (const auto& H : lat::hollow_polygons(bh)) {
            const std::size_t n = H.size();
            auto ineq = lat::inequalities(H);
            const std::int64_t lH = lat::lattice_point_count(H);
            std::vector<std::pair<std::int64_t, std::int64_t>> apexes;  // doubled coordinates
            for (std::size_t e = 0; e < n; ++e) {
                auto d = H[(e + 1) % n] - H[e];
                if (lat::gcd(d.x, d.y) != 2) continue;
                // doubled coordinates: on <n_e, X> = 2c_e + 1, inside every other edge
                std::vector<lat::Ineq> region;
                for (std::size_t f = 0; f < n; ++f) {
                    if (f == e) continue;
                    region.push_back({ineq[f].a, ineq[f].b, 2 * ineq[f].c});
                }
                region.push_back({ineq[e].a, ineq[e].b, 2 * ineq[e].c + 1});
                region.push_back({-ineq[e].a, -ineq[e].b, -(2 * ineq[e].c + 1)});
                for (auto X : lat::points_in(region)) apexes.emplace_back(X.x, X.y);
            }
            for (std::size_t e = 0; e < n; ++e) {
                const auto& f1 = ineq[(e + n - 1) % n];
                const auto& f2 = ineq[e];
                auto d1 = H[e] - H[(e + n - 1) % n];
                auto d2 = H[(e + 1) % n] - H[e];
                if (lat::gcd(d1.x, d1.y) != 1 || lat::gcd(d2.x, d2.y) != 1) continue;
                // <f1, X> = 2c1 + 1 and <f2, X> = 2c2 + 1
                std::int64_t det = f1.a * f2.b - f1.b * f2.a;
                std::int64_t r1 = 2 * f1.c + 1, r2 = 2 * f2.c + 1;
                std::int64_t X = r1 * f2.b - r2 * f1.b, Y = f1.a * r2 - f2.a * r1;
                if (det == 0 || X % det != 0 || Y % det != 0) continue;
                apexes.emplace_back(X / det, Y / det);
            }
            for (auto [x2, y2] : apexes) {
                std::vector<Point> pts;
                for (auto v : H) pts.push_back(Point(v.x, v.y));
                pts.push_back(half(x2, y2));
                auto P = convex_hull(std::move(pts));
                if (detail::one_interior_pip(P) && count_lattice_points(P).total == lH) found.push_back(P);
            }
        }
    }
    return detail::finish(std::move(found), Provenance::constructive_i1, nullptr);
}

/// Number of extremal classes with b = 2i + 7.
inline std::int64_t extremal_class_count(std::int64_t i) {
    return (i - 1) / 2 + 2 + (i == 3 ? 1 : 0) - (i == 1 ? 1 : 0);
}

/// The half-integral pseudo-integral polygons with b = 2i + 7, from the
/// families P2_ext_a (0 <= a <= (i-1)/2), P2_ext_s (i > 1) and P2_ext_s3
/// (i = 3).
inline ClassificationResult classify_extremal(std::int64_t i) {
    if (i < 1) throw ParameterOutOfRange("classify_extremal needs i >= 1");
    std::vector<ConvexPolygon> polys;
    for (std::int64_t a = 0; 2 * a <= i - 1; ++a) polys.push_back(generate({FamilyId::P2_ext_a, i, 0, a}));
    if (i > 1) polys.push_back(generate({FamilyId::P2_ext_s, i}));
    if (i == 3) polys.push_back(generate({FamilyId::P2_ext_s3}));
    return detail::finish(std::move(polys), Provenance::extremal, nullptr);
}

struct RealizablePair {
    std::int64_t i;
    std::int64_t b;
    ConvexPolygon witness;
};

/// Pairs (i, b) with i <= i_max realized by a half-integral pseudo-integral
/// polygon: (0, 3) and 2 <= b <= 2i + 7 for i >= 1.
inline std::vector<RealizablePair> realizable_pairs(std::int64_t i_max) {
    std::vector<RealizablePair> out;
    if (i_max >= 0) out.push_back({0, 3, half_integral_witness(0, 3)});
    for (std::int64_t i = 1; i <= i_max; ++i)
        for (std::int64_t b = 2; b <= 2 * i + 7; ++b) out.push_back({i, b, half_integral_witness(i, b)});
    return out;
}

}  // namespace qpc
