#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "qpc/geometry.hpp"
#include "qpc/lattice.hpp"

using namespace qpc;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }
Point pt(long x, long y) { return Point(x, y); }
Point pt(Rational x, Rational y) { return Point(std::move(x), std::move(y)); }

const ConvexPolygon T03 = make_polygon({pt(0, 0), pt(2, 0), pt(q(0), q(1, 2))});
const ConvexPolygon T12 = make_polygon({pt(0, 1), pt(1, -1), pt(q(3, 2), q(0))});

}  // namespace

TEST(ConvexHull, Square) {
    auto P = convex_hull({pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)});
    EXPECT_EQ(P.size(), 4u);
    EXPECT_EQ(P[0], pt(0, 0));
    EXPECT_EQ(P[1], pt(1, 0));
    EXPECT_EQ(P[2], pt(1, 1));
}

TEST(ConvexHull, DropsInteriorAndCollinear) {
    auto P = convex_hull({pt(0, 0), pt(2, 0), pt(1, 0), pt(q(0), q(1, 2))});
    ASSERT_EQ(P.size(), 3u);
    EXPECT_EQ(P, make_polygon({pt(0, 0), pt(2, 0), pt(q(0), q(1, 2))}));
    EXPECT_EQ(P.denominator(), 2);
}

TEST(ConvexHull, OrdersCounterclockwise) {
    auto P = convex_hull({pt(0, 1), pt(1, -1), pt(q(3, 2), q(0))});
    ASSERT_EQ(P.size(), 3u);
    EXPECT_EQ(P[0], pt(1, -1));
    EXPECT_EQ(P[1], pt(q(3, 2), q(0)));
    EXPECT_EQ(P[2], pt(0, 1));
    EXPECT_GT(area(P), 0);
}

TEST(ConvexHull, Degenerate) {
    EXPECT_THROW(convex_hull({pt(0, 0), pt(1, 1), pt(2, 2)}), DegenerateInput);
    EXPECT_THROW(convex_hull({pt(0, 0), pt(1, 0), pt(0, 0)}), DegenerateInput);
}

TEST(Area, Examples) {
    EXPECT_EQ(area(T03), q(1, 2));
    EXPECT_EQ(area(make_polygon({pt(0, 1), pt(1, -1), pt(q(7, 2), q(0))})), 3);
}

TEST(CountLatticePoints, Examples) {
    EXPECT_EQ(count_lattice_points(T03), (LatticeCounts{3, 0, 3}));
    EXPECT_EQ(count_lattice_points(T12), (LatticeCounts{3, 1, 2}));
    EXPECT_EQ(count_lattice_points(make_polygon({pt(0, 0), pt(3, 0), pt(0, 3)})), (LatticeCounts{10, 1, 9}));
}

TEST(CountLatticePoints, MatchesBoundingBoxOracle) {
    std::mt19937_64 rng(1);
    for (int n = 0; n < 500; ++n) {
        auto P = oracle::random_polygon(rng, 10, 4);
        auto c = count_lattice_points(P);
        auto o = oracle::brute_counts(P);
        ASSERT_EQ(c.total, o.total) << n;
        ASSERT_EQ(c.interior, o.interior) << n;
        ASSERT_EQ(c.boundary, o.boundary) << n;
        ASSERT_EQ(c.total, c.interior + c.boundary);
        ASSERT_EQ(static_cast<long>(lattice_points(P).size()), c.total);
    }
}

TEST(Dilate, Examples) {
    EXPECT_EQ(dilate(T03, 2), make_polygon({pt(0, 0), pt(4, 0), pt(0, 1)}));
    EXPECT_EQ(dilate(T03, 1), T03);
    EXPECT_EQ(count_lattice_points(dilate(T12, 2)).boundary, 4);
    EXPECT_EQ(oracle::brute_counts(make_polygon({pt(0, 2), pt(2, -2), pt(3, 0)})).boundary, 4);
}

TEST(Dilate, AreaScalesQuadratically) {
    std::mt19937_64 rng(2);
    for (int n = 0; n < 100; ++n) {
        auto P = oracle::random_polygon(rng, 10, 4);
        for (long k = 1; k <= 5; ++k) {
            auto D = dilate(P, k);
            EXPECT_EQ(area(D), k * k * area(P));
            EXPECT_EQ(P.denominator() % D.denominator(), 0);
        }
    }
}

TEST(IntegerHull, Examples) {
    auto h = integer_hull(T03);
    ASSERT_EQ(dimension(h), 1);
    EXPECT_EQ(std::get<Segment>(h).a, pt(0, 0));
    EXPECT_EQ(std::get<Segment>(h).b, pt(2, 0));

    auto L = make_polygon({pt(0, 0), pt(3, 0), pt(1, 2)});
    EXPECT_EQ(std::get<ConvexPolygon>(integer_hull(L)), L);

    auto h0 = integer_hull(make_polygon({pt(q(1, 2), q(1, 2)), pt(q(3, 2), q(1, 2)), pt(q(1, 2), q(3, 2))}));
    ASSERT_EQ(dimension(h0), 0);
    EXPECT_EQ(std::get<Point>(h0), pt(1, 1));

    auto he = integer_hull(make_polygon({pt(q(1, 3), q(1, 3)), pt(q(2, 3), q(1, 3)), pt(q(1, 3), q(2, 3))}));
    EXPECT_EQ(dimension(he), -1);
}

TEST(IntegerHullRelations, Preconditions) {
    EXPECT_THROW(integer_hull_relations(make_polygon({pt(0, 0), pt(1, 0), pt(0, 1)})), PreconditionViolated);
    EXPECT_THROW(integer_hull_relations(T03), PreconditionViolated);
}

TEST(IntegerHullRelations, PentagonFamilyMember) {
    // pentagon (0,3/2),(0,1),(2i+7-b,0),(2i+4,0),(2i+2,1/2) at (i,b) = (2,3)
    auto P = make_polygon({pt(q(0), q(3, 2)), pt(0, 1), pt(2 * 2 + 7 - 3, 0), pt(2 * 2 + 4, 0), pt(q(6), q(1, 2))});
    auto r = integer_hull_relations(P);
    auto c = oracle::brute_counts(P);
    auto ch = oracle::brute_counts(r.hull);
    EXPECT_EQ(r.i_polygon, c.interior);
    EXPECT_EQ(r.i_hull, ch.interior);
    EXPECT_EQ(r.b_hull, ch.boundary);
    EXPECT_TRUE(r.interior_grows());
    EXPECT_TRUE(r.boundary_identity());
    EXPECT_TRUE(r.area_identity());
}

TEST(LatticeDistance, Examples) {
    EXPECT_EQ(lattice_distance(pt(0, 1), pt(5, 1), pt(0, 0)), 1);
    EXPECT_EQ(lattice_distance(pt(0, -1), pt(q(1, 2), q(0)), pt(0, 0)), 1);
    EXPECT_EQ(lattice_distance(pt(q(3, 2), q(0)), pt(q(3, 2), q(7)), pt(0, 0)), q(3, 2));
    EXPECT_THROW(lattice_distance(pt(1, 1), pt(1, 1), pt(0, 0)), DegenerateInput);
}

TEST(LatticeDistance, UnimodularInvariance) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> c(-6, 6), dd(1, 4);
    auto rp = [&] { return pt(q(c(rng), dd(rng)), q(c(rng), dd(rng))); };
    for (int n = 0; n < 200; ++n) {
        Point a = rp(), b = rp(), p = rp();
        if (a == b) continue;
        // random product of shears and a swap
        long m = c(rng), k = c(rng);
        auto T = [&](const Point& v) {
            Point w{v.x + m * v.y, v.y};
            w = Point{w.x, w.y + k * w.x};
            return Point{w.y + 2, w.x - 3};
        };
        EXPECT_EQ(lattice_distance(a, b, p), lattice_distance(T(a), T(b), T(p)));
    }
}

TEST(EdgeLatticeInfo, Examples) {
    for (const auto& e : edge_lattice_info(T03)) EXPECT_GE(e.lattice_points, 1);
    EXPECT_TRUE(lattice_point_on_every_edge(T03));

    auto P = make_polygon({pt(0, 0), pt(1, 0), pt(q(1, 2), q(1, 2))});
    bool found = false;
    for (const auto& e : edge_lattice_info(P))
        if ((e.a == pt(1, 0) && e.b == pt(q(1, 2), q(1, 2))) || (e.b == pt(1, 0) && e.a == pt(q(1, 2), q(1, 2)))) {
            EXPECT_EQ(e.lattice_points, 1);  // only the endpoint (1,0)
            found = true;
        }
    EXPECT_TRUE(found);
    EXPECT_EQ(segment_lattice_points(pt(q(1, 2), q(1, 2)), pt(q(3, 4), q(1, 4))), 0);

    for (const auto& e : edge_lattice_info(make_polygon({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}))) {
        EXPECT_EQ(e.lattice_points, 2);
        EXPECT_EQ(e.lattice_length, e.lattice_points - 1);
    }
}

TEST(EdgeLatticeInfo, LatticeLengthOfLatticeEdges) {
    std::mt19937_64 rng(4);
    for (int n = 0; n < 100; ++n) {
        auto P = oracle::random_polygon(rng, 10, 1);
        for (const auto& e : edge_lattice_info(P)) {
            EXPECT_TRUE(e.line_has_lattice_points);
            EXPECT_EQ(e.lattice_length, e.lattice_points - 1);
        }
    }
}

TEST(LatticeFastPath, AgreesWithExactCounts) {
    std::mt19937_64 rng(5);
    for (int n = 0; n < 300; ++n) {
        auto P = oracle::random_polygon(rng, 10, 1);
        lat::Poly V;
        for (const auto& v : P.vertices()) V.push_back({to_i64(num(v.x)), to_i64(num(v.y))});
        V = lat::hull(V);
        auto c = count_lattice_points(P);
        EXPECT_EQ(lat::interior_points(V), c.interior);
        EXPECT_EQ(lat::boundary_points(V), c.boundary);
        EXPECT_EQ(static_cast<long>(lat::lattice_points(V).size()), c.total);
    }
}

TEST(LatticeFastPath, MovedOutPolygon) {
    // Unit square moved out by one is [-1,2]^2.
    lat::Poly sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    EXPECT_EQ(lat::moved_out_points(sq).size(), 16u);
    // Triangle (0,0),(2,0),(0,2) moved out: x>=-1, y>=-1, x+y<=3.
    lat::Poly t{{0, 0}, {2, 0}, {0, 2}};
    auto pts = lat::moved_out_points(t);
    long expect = 0;
    for (long x = -1; x <= 4; ++x)
        for (long y = -1; y <= 4; ++y)
            if (x + y <= 3) ++expect;
    EXPECT_EQ(static_cast<long>(pts.size()), expect);
}
