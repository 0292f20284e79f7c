#pragma once

// Enumeration of lattice polygons up to affine unimodular equivalence.
//
// Two engines share the machine-integer fast path:
//  * growth: every lattice polygon with n+1 lattice points is conv(P u {p})
//    for a polygon P with n lattice points and p in P^(-1), or the triangle
//    conv{(0,0),(n-1,0),(0,1)}. Levels are cached.
//  * interior hull: a polygon Q with I >= 2 interior points lies between its
//    interior hull H and conv(H^(-1) n Z^2). H runs over the growth level I
//    (or the segment of I points, handled in closed coordinates) and Q is
//    found by deleting vertices from the outer hull.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "qpc/lattice.hpp"

namespace qpc {

struct EnumerationBudget {
    /// Largest lattice-point count of a searched lattice polygon (for
    /// half-integral searches: of the doubled polygon).
    std::int64_t max_lattice_points = 64;
    /// Search nodes across all workers.
    std::int64_t max_nodes = 500'000'000;
    /// Zero means no limit.
    std::chrono::milliseconds time_limit{0};
    int jobs = 1;
};

namespace lat {

/// Shared node/time accounting for one search. Workers poll `stopped()`.
class SearchControl {
public:
    explicit SearchControl(const EnumerationBudget& b)
        : budget_(b), start_(std::chrono::steady_clock::now()) {}

    /// Count one node; false once the budget is exhausted.
    bool tick() {
        auto n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
        if (n > budget_.max_nodes) return fail("node budget exhausted");
        if (budget_.time_limit.count() > 0 && (n & 0xfff) == 0 &&
            std::chrono::steady_clock::now() - start_ > budget_.time_limit)
            return fail("time limit exceeded");
        return !stopped();
    }

    bool fail(const std::string& why) {
        std::lock_guard lock(mu_);
        if (!stopped_.exchange(true)) reason_ = why;
        return false;
    }

    bool stopped() const { return stopped_.load(std::memory_order_relaxed); }
    std::string reason() const {
        std::lock_guard lock(mu_);
        return reason_;
    }
    std::uint64_t nodes() const { return nodes_.load(); }
    int jobs() const { return std::max(1, budget_.jobs); }
    const EnumerationBudget& budget() const { return budget_; }

private:
    EnumerationBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::atomic<std::int64_t> nodes_{0};
    std::atomic<bool> stopped_{false};
    mutable std::mutex mu_;
    std::string reason_;
};

/// Runs fn(k) for k in [0, n) on `jobs` threads, each collecting into its own
/// bucket; the buckets are concatenated, sorted and deduplicated, so the
/// result does not depend on the number of workers.
template <typename T, typename Fn>
std::vector<T> parallel_collect(std::size_t n, int jobs, Fn fn) {
    jobs = std::max(1, std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(n, 1))));
    std::vector<std::vector<T>> buckets(jobs);
    auto work = [&](int w) {
        for (std::size_t k = w; k < n; k += jobs) fn(k, buckets[w]);
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < jobs; ++w) threads.emplace_back(work, w);
        for (auto& t : threads) t.join();
    }
    std::vector<T> out;
    for (auto& b : buckets) out.insert(out.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// conv{(0,0),(n-2,0),(0,1)}, the unique polygon with n lattice points n-1 of
/// which are collinear.
inline Poly seed_triangle(i64 n) { return hull({{0, 0}, {n - 2, 0}, {0, 1}}); }

namespace detail {

inline std::vector<Poly> grow(const std::vector<Poly>& level, i64 n, SearchControl& ctl,
                              const std::function<bool(const Poly&)>& keep) {
    auto next = parallel_collect<Poly>(level.size(), ctl.jobs(), [&](std::size_t k, std::vector<Poly>& out) {
        if (ctl.stopped()) return;
        const Poly& P = level[k];
        for (auto p : moved_out_points(P)) {
            if (contains(P, p)) continue;
            if (!ctl.tick()) return;
            Poly V = P;
            V.push_back(p);
            Poly Q = hull(std::move(V));
            if (lattice_point_count(Q) != n + 1 || !keep(Q)) continue;
            out.push_back(canonical_key(Q));
        }
    });
    Poly s = seed_triangle(n + 1);
    if (keep(s)) {
        auto key = canonical_key(s);
        auto it = std::lower_bound(next.begin(), next.end(), key);
        if (it == next.end() || *it != key) next.insert(it, key);
    }
    return next;
}

struct LevelCache {
    std::mutex mu;
    std::vector<std::vector<Poly>> levels;  // levels[n] = canonical keys with n lattice points
};

inline LevelCache& level_cache() {
    static LevelCache c;
    return c;
}

}  // namespace detail

/// Canonical keys of all lattice polygons with exactly n lattice points,
/// sorted. Empty and ctl stopped when the budget runs out.
inline std::vector<Poly> polygons_with_points(i64 n, SearchControl& ctl) {
    if (n < 3) return {};
    auto& cache = detail::level_cache();
    std::lock_guard lock(cache.mu);
    auto& L = cache.levels;
    if (L.size() < 4) {
        L.resize(4);
        L[3] = {canonical_key(seed_triangle(3))};
    }
    while (static_cast<i64>(L.size()) <= n) {
        i64 m = static_cast<i64>(L.size()) - 1;
        auto next = detail::grow(L[m], m, ctl, [](const Poly&) { return true; });
        if (ctl.stopped()) return {};
        L.push_back(std::move(next));
    }
    return L[n];
}

/// Lattice polygons with no interior points and b boundary points: the
/// triangle conv{(0,0),(2,0),(0,2)} for b = 6 and the trapezoids
/// conv{(1,0),(d,0),(u,1),(1,1)} with 1 <= u <= d, d > 1, u + d = b.
inline std::vector<Poly> hollow_polygons(i64 b) {
    std::vector<Poly> out;
    if (b < 3) return out;
    if (b == 6) out.push_back(canonical_key(hull({{0, 0}, {2, 0}, {0, 2}})));
    for (i64 u = 1; 2 * u <= b; ++u) {
        i64 d = b - u;
        if (d < 2) continue;
        out.push_back(canonical_key(hull({{1, 0}, {d, 0}, {u, 1}, {1, 1}})));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Polygons with exactly one interior point: grown level by level, discarding
/// anything with two or more interior points (a subpolygon never has more).
inline std::vector<Poly> one_interior_polygons(i64 b, SearchControl& ctl) {
    auto keep = [](const Poly& Q) { return interior_points(Q) <= 1; };
    std::vector<Poly> level{canonical_key(seed_triangle(3))};
    for (i64 n = 3; n < b + 1; ++n) {
        level = detail::grow(level, n, ctl, keep);
        if (ctl.stopped()) return {};
    }
    std::vector<Poly> out;
    for (auto& Q : level)
        if (interior_points(Q) == 1 && boundary_points(Q) == b) out.push_back(Q);
    return out;
}

/// Polygons whose I >= 2 interior points lie on a line. After a unimodular
/// change of coordinates the interior points are (0,0)..(I-1,0) and the
/// polygon lies in R x [-1,1] with rows y = 1 from (0,1) to (p2,1) and
/// y = -1 from (q1,-1) to (q2,-1), plus optionally (-1,0) and (I,0).
inline std::vector<Poly> collinear_interior_polygons(i64 I, i64 B, SearchControl& ctl) {
    std::vector<Poly> out;
    for (i64 p2 = 0; p2 <= 2 * I + 2; ++p2)
        for (i64 q1 = -2; q1 <= 2 * I; ++q1)
            for (i64 q2 = q1; q2 <= 2 * I - p2; ++q2)
                for (int ends = 0; ends < 4; ++ends) {
                    if (!ctl.tick()) return {};
                    std::vector<IPt> V{{0, 1}, {p2, 1}, {q1, -1}, {q2, -1}};
                    if (ends & 1) V.push_back({-1, 0});
                    if (ends & 2) V.push_back({I, 0});
                    Poly Q = hull(std::move(V));
                    if (Q.size() < 3 || interior_points(Q) != I || boundary_points(Q) != B) continue;
                    bool line = true;
                    for (i64 x = 0; x < I && line; ++x) line = strictly_inside(Q, {x, 0});
                    if (line) out.push_back(canonical_key(Q));
                }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace detail {

inline Poly without_vertex(const std::vector<IPt>& pts, IPt v) {
    std::vector<IPt> rest;
    rest.reserve(pts.size());
    for (auto p : pts)
        if (p != v) rest.push_back(p);
    return hull(std::move(rest));
}

/// Polygons Q with H strictly inside, l(Q) = I + B and interior points
/// exactly those of H, reachable from M by deleting vertices.
inline void shrink_search(const Poly& H, const Poly& M, i64 I, i64 B, SearchControl& ctl, std::vector<Poly>& out) {
    std::set<Poly> seen;
    std::vector<Poly> stack{M};
    seen.insert(M);
    auto surrounds = [&](const Poly& Q) {
        if (Q.size() < 3) return false;
        for (auto h : H)
            if (!strictly_inside(Q, h)) return false;
        return true;
    };
    while (!stack.empty()) {
        if (!ctl.tick()) return;
        Poly Q = std::move(stack.back());
        stack.pop_back();
        i64 l = lattice_point_count(Q);
        if (l == I + B) {
            if (interior_points(Q) == I) out.push_back(canonical_key(Q));
            continue;
        }
        auto pts = lattice_points(Q);
        for (auto v : Q) {
            Poly R = without_vertex(pts, v);
            if (!surrounds(R) || !seen.insert(R).second) continue;
            stack.push_back(std::move(R));
        }
    }
}

}  // namespace detail

/// Canonical keys of all lattice polygons with I interior and B boundary
/// points, sorted. Returns an empty list with ctl stopped on budget
/// exhaustion.
inline std::vector<Poly> polygons_with_counts(i64 I, i64 B, SearchControl& ctl) {
    if (I < 0 || B < 3) return {};
    if (I + B > ctl.budget().max_lattice_points) {
        ctl.fail("needs " + std::to_string(I + B) + " lattice points, budget is " +
                 std::to_string(ctl.budget().max_lattice_points));
        return {};
    }
    if (I == 0) return hollow_polygons(B);
    if (I == 1) return B <= 9 ? one_interior_polygons(B, ctl) : std::vector<Poly>{};
    if (B > 2 * I + 6) return {};

    auto out = collinear_interior_polygons(I, B, ctl);
    if (ctl.stopped()) return {};
    auto hulls = polygons_with_points(I, ctl);
    if (ctl.stopped()) return {};
    auto found = parallel_collect<Poly>(hulls.size(), ctl.jobs(), [&](std::size_t k, std::vector<Poly>& bucket) {
        if (ctl.stopped()) return;
        const Poly& H = hulls[k];
        Poly M = hull(moved_out_points(H));
        if (lattice_point_count(M) < I + B) return;
        detail::shrink_search(H, M, I, B, ctl, bucket);
    });
    if (ctl.stopped()) return {};
    out.insert(out.end(), found.begin(), found.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace lat
}  // namespace qpc
