#pragma once

// Ehrhart quasi-polynomials of rational polygons, period sequences,
// pseudo-integrality and the Ehrhart-polynomial membership predicates.

#include <array>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qpc/geometry.hpp"

namespace qpc {

/// e2(t) t^2 + e1(t) t + e0(t) with periodic coefficient functions.
struct QuasiPolynomial {
    /// Rows indexed by residue r in [0, period), each (e0, e1, e2).
    std::vector<std::array<Rational, 3>> coeffs;
    /// Periods of e0, e1, e2.
    std::array<std::int64_t, 3> period_sequence{1, 1, 1};

    std::int64_t period() const { return static_cast<std::int64_t>(coeffs.size()); }
    bool is_polynomial() const { return period() == 1; }

    const Rational& coefficient(int j, std::int64_t t) const { return coeffs[mod(t, period())][j]; }

    Rational operator()(std::int64_t t) const {
        const auto& c = coeffs[mod(t, period())];
        Rational tt(t);
        return (c[2] * tt + c[1]) * tt + c[0];
    }

    friend bool operator==(const QuasiPolynomial&, const QuasiPolynomial&) = default;

    /// Builds from a table of any period that is a multiple of the true one:
    /// each coefficient gets the least period under which it is constant on
    /// residue classes, and the table is folded to their lcm.
    static QuasiPolynomial from_table(const std::vector<std::array<Rational, 3>>& table) {
        const auto d = static_cast<std::int64_t>(table.size());
        QuasiPolynomial q;
        for (int j = 0; j < 3; ++j) {
            for (std::int64_t p = 1; p <= d; ++p) {
                if (d % p) continue;
                bool ok = true;
                for (std::int64_t r = p; r < d && ok; ++r) ok = table[r][j] == table[r % p][j];
                if (ok) {
                    q.period_sequence[j] = p;
                    break;
                }
            }
        }
        std::int64_t per = std::lcm(std::lcm(q.period_sequence[0], q.period_sequence[1]), q.period_sequence[2]);
        q.coeffs.assign(table.begin(), table.begin() + per);
        return q;
    }
};

inline std::string format_quasi_polynomial(const QuasiPolynomial& q) {
    std::string s = "period=" + std::to_string(q.period());
    for (std::int64_t r = 0; r < q.period(); ++r) {
        const auto& c = q.coeffs[r];
        s += "; r=" + std::to_string(r) + ": " + to_string(c[2]) + " t^2 + " + to_string(c[1]) + " t + " +
             to_string(c[0]);
    }
    return s;
}

/// Closed form for denominators 1 and 2.
inline QuasiPolynomial ehrhart_half_integral(const ConvexPolygon& P) {
    if (P.denominator() > 2) throw DenominatorTooLarge("denominator " + P.denominator().str() + " exceeds 2");
    auto c = count_lattice_points(P);
    auto b2 = count_lattice_points(dilate(P, 2)).boundary;
    Rational A = area(P);
    Rational half_b = Rational(c.boundary) / 2;
    std::vector<std::array<Rational, 3>> table(2);
    table[0] = {Rational(1), Rational(b2) / 4, A};
    table[1] = {Rational(c.total) - A - half_b, half_b, A};
    return QuasiPolynomial::from_table(table);
}

/// Interpolation from exact counts. For each residue r mod d the quadratic
/// through t = r, r+d, r+2d is fitted (l(0P) = 1) and checked at r+3d.
inline QuasiPolynomial ehrhart_general(const ConvexPolygon& P) {
    const std::int64_t d = to_i64(P.denominator());
    auto l = [&](std::int64_t t) -> Rational {
        if (t == 0) return 1;
        return count_lattice_points(dilate(P, t)).total;
    };
    std::vector<std::array<Rational, 3>> table(d);
    Rational D(d);
    for (std::int64_t r = 0; r < d; ++r) {
        Rational t0(r), t1(r + d);
        Rational y0 = l(r), y1 = l(r + d), y2 = l(r + 2 * d);
        Rational e2 = (y2 - 2 * y1 + y0) / (2 * D * D);
        Rational e1 = (y1 - y0 - e2 * (t1 * t1 - t0 * t0)) / D;
        Rational e0 = y0 - e2 * t0 * t0 - e1 * t0;
        Rational t3(r + 3 * d);
        if ((e2 * t3 + e1) * t3 + e0 != l(r + 3 * d))
            throw std::logic_error("Ehrhart interpolation failed its consistency check");
        table[r] = {e0, e1, e2};
    }
    return QuasiPolynomial::from_table(table);
}

/// ehr_P(-k) = i(kP) for k = 1..k_max.
inline bool check_reciprocity(const ConvexPolygon& P, std::int64_t k_max) {
    auto q = ehrhart_general(P);
    for (std::int64_t k = 1; k <= k_max; ++k)
        if (q(-k) != count_lattice_points(dilate(P, k)).interior) return false;
    return true;
}

struct PseudoIntegralityReport {
    bool obeys_pick = false;
    bool lattice_point_on_every_edge = false;
    std::array<std::int64_t, 3> period_sequence{1, 1, 1};
    bool is_pseudo_integral = false;
};

inline bool obeys_pick(const ConvexPolygon& P) {
    auto c = count_lattice_points(P);
    return area(P) == Rational(c.interior) + Rational(c.boundary) / 2 - 1;
}

/// Denominator <= 2: Pick's formula and a lattice point on every edge.
/// Larger denominators: kP obeys Pick and b(kP) = k b(P) for k = 1..denom.
inline PseudoIntegralityReport pseudo_integrality(const ConvexPolygon& P) {
    PseudoIntegralityReport r;
    r.lattice_point_on_every_edge = lattice_point_on_every_edge(P);
    if (P.denominator() <= 2) {
        r.obeys_pick = obeys_pick(P);
        r.is_pseudo_integral = r.obeys_pick && r.lattice_point_on_every_edge;
        r.period_sequence = ehrhart_half_integral(P).period_sequence;
        return r;
    }
    const std::int64_t d = to_i64(P.denominator());
    auto b1 = count_lattice_points(P).boundary;
    r.obeys_pick = true;
    bool boundary_linear = true;
    for (std::int64_t k = 1; k <= d; ++k) {
        auto kP = dilate(P, k);
        auto c = count_lattice_points(kP);
        if (area(kP) != Rational(c.interior) + Rational(c.boundary) / 2 - 1) r.obeys_pick = false;
        if (c.boundary != k * b1) boundary_linear = false;
    }
    r.is_pseudo_integral = r.obeys_pick && boundary_linear;
    r.period_sequence = ehrhart_general(P).period_sequence;
    return r;
}

struct DilateInvariants {
    std::int64_t i_dP;
    std::int64_t b_dP;
};

/// Interior and boundary counts of dP (d = denom P) from those of P.
inline DilateInvariants dilate_invariants(const ConvexPolygon& P) {
    if (!pseudo_integrality(P).is_pseudo_integral) throw NotPseudoIntegral("polygon is not pseudo-integral");
    const std::int64_t d = to_i64(P.denominator());
    auto c = count_lattice_points(P);
    DilateInvariants r{d * d * c.interior + (d * d - d) / 2 * c.boundary - d * d + 1, d * c.boundary};
    auto cd = count_lattice_points(dilate(P, d));
    if (cd.interior != r.i_dP || cd.boundary != r.b_dP)
        throw std::logic_error("dilate invariants disagree with direct counts");
    return r;
}

struct MembershipResult {
    bool member = false;
    /// (i, b) when member.
    std::optional<std::pair<std::int64_t, std::int64_t>> witness;
    explicit operator bool() const { return member; }
};

namespace detail {

/// Solves e1 = b/2, e2 = i + b/2 - 1 over the integers, given e0 = 1.
inline std::optional<std::pair<std::int64_t, std::int64_t>> solve_ib(const Rational& e2, const Rational& e1,
                                                                     const Rational& e0) {
    if (e0 != 1) return std::nullopt;
    Rational b = 2 * e1;
    Rational i = e2 - e1 + 1;
    if (!is_integer(b) || !is_integer(i)) return std::nullopt;
    return std::pair{to_i64(num(i)), to_i64(num(b))};
}

}  // namespace detail

/// Ehrhart polynomials of lattice polygons: e0 = 1 and (i, b) in
/// {0} x Z>=3, {i > 0, 3 <= b <= 2i+6}, or (1, 9).
inline MembershipResult is_ehrhart_polynomial_lattice(const Rational& e2, const Rational& e1, const Rational& e0) {
    MembershipResult r;
    auto ib = detail::solve_ib(e2, e1, e0);
    if (!ib) return r;
    auto [i, b] = *ib;
    r.member = (i == 0 && b >= 3) || (i > 0 && b >= 3 && b <= 2 * i + 6) || (i == 1 && b == 9);
    if (r.member) r.witness = ib;
    return r;
}

/// Ehrhart polynomials of denominator-2 pseudo-integral polygons: e0 = 1 and
/// (i, b) = (0, 3) or i > 0, 2 <= b <= 2i+7.
inline MembershipResult is_ehrhart_polynomial_half_integral_pip(const Rational& e2, const Rational& e1,
                                                                const Rational& e0) {
    MembershipResult r;
    auto ib = detail::solve_ib(e2, e1, e0);
    if (!ib) return r;
    auto [i, b] = *ib;
    r.member = (i == 0 && b == 3) || (i > 0 && b >= 2 && b <= 2 * i + 7);
    if (r.member) r.witness = ib;
    return r;
}

}  // namespace qpc
