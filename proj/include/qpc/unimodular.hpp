#pragma once

// Affine unimodular maps, canonical representatives and equivalence.

#include <array>
#include <cstdint>
#include <random>

#include "qpc/geometry.hpp"
#include "qpc/lattice.hpp"

namespace qpc {

/// x -> A x + b with A an integer matrix of determinant +-1 and b integral.
struct UnimodularMap {
    std::array<std::array<std::int64_t, 2>, 2> A{{{1, 0}, {0, 1}}};
    std::array<std::int64_t, 2> b{0, 0};

    std::int64_t det() const { return A[0][0] * A[1][1] - A[0][1] * A[1][0]; }
    bool valid() const { return det() == 1 || det() == -1; }

    Point operator()(const Point& p) const {
        return {A[0][0] * p.x + A[0][1] * p.y + b[0], A[1][0] * p.x + A[1][1] * p.y + b[1]};
    }

    /// (*this) after `first`.
    UnimodularMap compose(const UnimodularMap& first) const {
        UnimodularMap r;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) r.A[i][j] = A[i][0] * first.A[0][j] + A[i][1] * first.A[1][j];
            r.b[i] = A[i][0] * first.b[0] + A[i][1] * first.b[1] + b[i];
        }
        return r;
    }

    friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;
};

inline ConvexPolygon apply(const UnimodularMap& T, const ConvexPolygon& P) {
    if (!T.valid()) throw InvalidMap("determinant is " + std::to_string(T.det()));
    std::vector<Point> pts;
    pts.reserve(P.size());
    for (const auto& v : P.vertices()) pts.push_back(T(v));
    return convex_hull(std::move(pts));
}

/// Random map with small entries, built from elementary shears, a possible
/// reflection and a translation in [-5, 5]^2.
template <typename Rng>
UnimodularMap random_unimodular(Rng& rng, int steps = 4) {
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<std::int64_t> small(-3, 3), shift(-5, 5);
    UnimodularMap T;
    for (int s = 0; s < steps; ++s) {
        UnimodularMap E;
        if (coin(rng))
            E.A[0][1] = small(rng);
        else
            E.A[1][0] = small(rng);
        T = E.compose(T);
    }
    if (coin(rng)) {
        UnimodularMap R;
        R.A = {{{0, 1}, {1, 0}}};
        T = R.compose(T);
    }
    T.b = {shift(rng), shift(rng)};
    return T;
}

struct CanonicalForm {
    ConvexPolygon polygon;
    /// Maps the input polygon onto `polygon`.
    UnimodularMap witness;
};

namespace detail {

inline lat::Poly scaled_lattice(const ConvexPolygon& P) {
    const BigInt& d = P.denominator();
    static const BigInt limit = BigInt(1) << 40;
    lat::Poly V;
    V.reserve(P.size());
    for (const auto& v : P.vertices()) {
        BigInt x = num(v.x * d), y = num(v.y * d);
        if (abs(x) > limit || abs(y) > limit) throw PreconditionViolated("coordinates too large for canonical form");
        V.push_back({to_i64(x), to_i64(y)});
    }
    return V;
}

}  // namespace detail

/// Scales P by its denominator d, canonicalizes the lattice polygon dP under
/// maps whose translation lies in dZ^2, and scales back. The normalizing
/// vertex of the result has coordinates in [0, 1)^2.
inline CanonicalForm canonical_form(const ConvexPolygon& P) {
    auto V = detail::scaled_lattice(P);
    std::int64_t d = to_i64(P.denominator());
    auto c = lat::canonical(V, d);
    UnimodularMap T;
    T.A = {{{c.map.a11, c.map.a12}, {c.map.a21, c.map.a22}}};
    T.b = {c.map.t1 / d, c.map.t2 / d};
    return {apply(T, P), T};
}

inline bool are_equivalent(const ConvexPolygon& P, const ConvexPolygon& Q) {
    if (P.size() != Q.size() || P.denominator() != Q.denominator() || area(P) != area(Q)) return false;
    return canonical_form(P).polygon == canonical_form(Q).polygon;
}

}  // namespace qpc
