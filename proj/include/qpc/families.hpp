#pragma once

// Explicit polygon families with their claimed invariants, and a verifier
// that measures the generated polygons independently of the claims.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpc/ehrhart.hpp"
#include "qpc/geometry.hpp"

namespace qpc {

enum class FamilyId {
    P1_i3,      // lattice, (i, 3)
    P1_ib,      // lattice, (i, b), 4 <= b <= 2i+6
    P1_0b,      // lattice, (0, b)
    T2_i2,      // denominator 2, (i, 2)
    T2_03,      // denominator 2, (0, 3)
    T3_i1,      // denominator 3, (i, 1)
    Q3_0b,      // denominator 3, (0, b)
    Td_0d1,     // denominator d, (0, d+1); conjectural
    P2_ib,      // denominator 2, (i, b), 3 <= b <= 2i+7
    P2_ext_a,   // denominator 2, (i, 2i+7), offset a
    P2_ext_s,   // denominator 2, (i, 2i+7), i > 1
    P2_ext_s3,  // denominator 2, (3, 13)
};

inline constexpr std::array<std::pair<FamilyId, std::string_view>, 12> kFamilyNames{{
    {FamilyId::P1_i3, "P1_i3"},
    {FamilyId::P1_ib, "P1_ib"},
    {FamilyId::P1_0b, "P1_0b"},
    {FamilyId::T2_i2, "T2_i2"},
    {FamilyId::T2_03, "T2_03"},
    {FamilyId::T3_i1, "T3_i1"},
    {FamilyId::Q3_0b, "Q3_0b"},
    {FamilyId::Td_0d1, "Td_0d1"},
    {FamilyId::P2_ib, "P2_ib"},
    {FamilyId::P2_ext_a, "P2_ext_a"},
    {FamilyId::P2_ext_s, "P2_ext_s"},
    {FamilyId::P2_ext_s3, "P2_ext_s3"},
}};

inline std::string_view family_name(FamilyId id) {
    for (auto [f, n] : kFamilyNames)
        if (f == id) return n;
    return "?";
}

inline std::optional<FamilyId> family_from_name(std::string_view name) {
    for (auto [f, n] : kFamilyNames)
        if (n == name) return f;
    return std::nullopt;
}

/// Unused parameters are ignored.
struct FamilySpec {
    FamilyId id;
    std::int64_t i = 0;
    std::int64_t b = 0;
    std::int64_t a = 0;
    std::int64_t d = 0;
};

struct ClaimedInvariants {
    std::int64_t denominator;
    std::int64_t i;
    std::int64_t b;
    Rational area;
    /// The family is only conjectured to have these invariants.
    bool conjecture = false;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
    if (!ok) throw ParameterOutOfRange(what);
}

inline Point hp(std::int64_t x2, std::int64_t y2) { return {make_rational(x2, 2), make_rational(y2, 2)}; }

}  // namespace detail

/// Parameter check; throws ParameterOutOfRange naming the violated bound.
inline void check_family_params(const FamilySpec& s) {
    using detail::require;
    switch (s.id) {
        case FamilyId::P1_i3: require(s.i >= 1, "P1_i3 needs i >= 1"); break;
        case FamilyId::P1_ib:
            require(s.i >= 1, "P1_ib needs i >= 1");
            require(s.b >= 4, "P1_ib needs b >= 4 (use P1_i3 for b = 3)");
            require(s.b <= 2 * s.i + 6, "P1_ib needs b <= 2i+6");
            break;
        case FamilyId::P1_0b: require(s.b >= 3, "P1_0b needs b >= 3"); break;
        case FamilyId::T2_i2: require(s.i >= 1, "T2_i2 needs i >= 1"); break;
        case FamilyId::T2_03: break;
        case FamilyId::T3_i1: require(s.i >= 1, "T3_i1 needs i >= 1"); break;
        case FamilyId::Q3_0b: require(s.b >= 4, "Q3_0b needs b >= 4"); break;
        case FamilyId::Td_0d1: require(s.d >= 2, "Td_0d1 needs d >= 2"); break;
        case FamilyId::P2_ib:
            require(s.i >= 1, "P2_ib needs i >= 1");
            require(s.b >= 3, "P2_ib needs b >= 3");
            require(s.b <= 2 * s.i + 7, "P2_ib needs b <= 2i+7");
            break;
        case FamilyId::P2_ext_a:
            require(s.i >= 1, "P2_ext_a needs i >= 1");
            require(s.a >= 0, "P2_ext_a needs a >= 0");
            require(s.a <= s.i - 1, "P2_ext_a needs a <= i-1");
            break;
        case FamilyId::P2_ext_s: require(s.i >= 2, "P2_ext_s needs i > 1"); break;
        case FamilyId::P2_ext_s3: break;
    }
}

inline ConvexPolygon generate(const FamilySpec& s) {
    check_family_params(s);
    using detail::hp;
    const auto i = s.i, b = s.b, a = s.a, d = s.d;
    switch (s.id) {
        case FamilyId::P1_i3: return make_polygon({Point(0, 1), Point(1, -1), Point(i + 1, 0)});
        case FamilyId::P1_ib: return make_polygon({Point(0, -1), Point(b - 4, -1), Point(i + 1, 0), Point(0, 1)});
        case FamilyId::P1_0b: return make_polygon({Point(0, 0), Point(b - 2, 0), Point(0, 1)});
        case FamilyId::T2_i2: return make_polygon({Point(0, 1), Point(1, -1), hp(2 * i + 1, 0)});
        case FamilyId::T2_03: return make_polygon({Point(0, 0), Point(2, 0), hp(0, 1)});
        case FamilyId::T3_i1:
            return make_polygon({Point(make_rational(2, 3), 0), Point(1, 0),
                                 Point(make_rational(3 * i + 1, 3), Rational(6 * i - 3))});
        case FamilyId::Q3_0b:
            return make_polygon({Point(0, 0), Point(make_rational(1, 3), 0),
                                 Point(make_rational(3 * b - 7, 3), Rational(2 * b - 5)), Point(b - 1, 2 * b - 2)});
        case FamilyId::Td_0d1:
            return make_polygon({Point(0, 0), Point(make_rational(1, d), 0), Point(d, (d - 1) * d)});
        case FamilyId::P2_ib:
            return make_polygon({hp(0, 3), Point(0, 1), Point(2 * i + 7 - b, 0), Point(2 * i + 4, 0), hp(4 * i + 4, 1)});
        case FamilyId::P2_ext_a:
            return make_polygon({hp(0, 3), hp(0, 1), Point(a, 0), Point(a + 2 * i + 4, 0), hp(4 * i + 4, 1)});
        case FamilyId::P2_ext_s:
            return make_polygon({hp(0, 3), Point(0, 1), hp(1, 0), Point(2 * i + 5, 0), hp(4 * i + 4, 1)});
        case FamilyId::P2_ext_s3: return make_polygon({hp(0, 3), Point(0, 1), hp(1, 0), hp(23, 0), Point(4, 1)});
    }
    throw ParameterOutOfRange("unknown family");
}

/// The invariants each family is stated to have. Shipped as data so that
/// verify_family is a genuine cross-check of generate.
inline ClaimedInvariants claimed_invariants(const FamilySpec& s) {
    check_family_params(s);
    const auto i = s.i, b = s.b, d = s.d;
    auto pick = [](std::int64_t ii, std::int64_t bb) { return Rational(ii) + make_rational(bb, 2) - 1; };
    switch (s.id) {
        case FamilyId::P1_i3: return {1, i, 3, make_rational(2 * i + 1, 2)};
        case FamilyId::P1_ib: return {1, i, b, pick(i, b)};
        case FamilyId::P1_0b: return {1, 0, b, make_rational(b - 2, 2)};
        case FamilyId::T2_i2: return {2, i, 2, Rational(i)};
        case FamilyId::T2_03: return {2, 0, 3, make_rational(1, 2)};
        case FamilyId::T3_i1: return {3, i, 1, make_rational(2 * i - 1, 2)};
        case FamilyId::Q3_0b: return {3, 0, b, make_rational(b - 2, 2)};
        case FamilyId::Td_0d1: return {d, 0, d + 1, make_rational(d - 1, 2), true};
        case FamilyId::P2_ib: return {2, i, b, pick(i, b)};
        case FamilyId::P2_ext_a:
        case FamilyId::P2_ext_s: return {2, i, 2 * i + 7, make_rational(4 * i + 5, 2)};
        case FamilyId::P2_ext_s3: return {2, 3, 13, make_rational(17, 2)};
    }
    throw ParameterOutOfRange("unknown family");
}

struct FamilyReport {
    FamilySpec spec;
    ConvexPolygon polygon;
    ClaimedInvariants claimed;
    std::int64_t denominator, i, b;
    Rational area;
    bool pseudo_integral;
    /// The measured Ehrhart data satisfies the membership predicate that
    /// matches the denominator (lattice or denominator-2 pseudo-integral);
    /// vacuously true for other denominators.
    bool membership;

    bool matches() const {
        return denominator == claimed.denominator && i == claimed.i && b == claimed.b && area == claimed.area &&
               pseudo_integral && membership;
    }
};

inline FamilyReport verify_family(const FamilySpec& s) {
    auto P = generate(s);
    auto claimed = claimed_invariants(s);
    auto c = count_lattice_points(P);
    auto pi = pseudo_integrality(P);
    Rational A = area(P);
    Rational e1 = make_rational(c.boundary, 2);
    bool member = true;
    if (P.denominator() == 1) member = bool(is_ehrhart_polynomial_lattice(A, e1, 1));
    if (P.denominator() == 2) member = bool(is_ehrhart_polynomial_half_integral_pip(A, e1, 1));
    return {s, P, claimed, to_i64(P.denominator()), c.interior, c.boundary, A, pi.is_pseudo_integral, member};
}

/// Every valid parameter choice with i <= i_max, b <= 2 i_max + 7 and
/// d <= d_max.
inline std::vector<FamilySpec> family_sweep(std::int64_t i_max, std::int64_t d_max) {
    std::vector<FamilySpec> out;
    const auto b_max = 2 * i_max + 7;
    out.push_back({FamilyId::T2_03});
    out.push_back({FamilyId::P2_ext_s3});
    for (std::int64_t b = 3; b <= b_max; ++b) out.push_back({FamilyId::P1_0b, 0, b});
    for (std::int64_t b = 4; b <= b_max; ++b) out.push_back({FamilyId::Q3_0b, 0, b});
    for (std::int64_t d = 2; d <= d_max; ++d) out.push_back({FamilyId::Td_0d1, 0, 0, 0, d});
    for (std::int64_t i = 1; i <= i_max; ++i) {
        out.push_back({FamilyId::P1_i3, i});
        out.push_back({FamilyId::T2_i2, i});
        out.push_back({FamilyId::T3_i1, i});
        for (std::int64_t b = 4; b <= 2 * i + 6; ++b) out.push_back({FamilyId::P1_ib, i, b});
        for (std::int64_t b = 3; b <= 2 * i + 7; ++b) out.push_back({FamilyId::P2_ib, i, b});
        for (std::int64_t a = 0; a <= i - 1; ++a) out.push_back({FamilyId::P2_ext_a, i, 0, a});
        if (i > 1) out.push_back({FamilyId::P2_ext_s, i});
    }
    return out;
}

/// A lattice polygon with i interior and b boundary points, for every pair
/// allowed by Scott's inequality.
inline ConvexPolygon scott_witnesses(std::int64_t i, std::int64_t b) {
    if (i == 1 && b == 9) return make_polygon({Point(0, 0), Point(3, 0), Point(0, 3)});
    if (i == 0 && b >= 3) return generate({FamilyId::P1_0b, 0, b});
    if (i >= 1 && b == 3) return generate({FamilyId::P1_i3, i});
    if (i >= 1 && b >= 4 && b <= 2 * i + 6) return generate({FamilyId::P1_ib, i, b});
    throw ParameterOutOfRange("(" + std::to_string(i) + "," + std::to_string(b) + ") violates Scott's inequality");
}

/// Denominator-2 pseudo-integral witness for every realizable pair.
inline ConvexPolygon half_integral_witness(std::int64_t i, std::int64_t b) {
    if (i == 0 && b == 3) return generate({FamilyId::T2_03});
    if (i >= 1 && b == 2) return generate({FamilyId::T2_i2, i});
    if (i >= 1 && b >= 3 && b <= 2 * i + 7) return generate({FamilyId::P2_ib, i, b});
    throw ParameterOutOfRange("(" + std::to_string(i) + "," + std::to_string(b) + ") is not realizable");
}

}  // namespace qpc
