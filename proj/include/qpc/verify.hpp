#pragma once

// End-to-end verification: family claims, census cells, one-interior and
// extremal classifications, duality identities, and frozen datasets.

#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "qpc/classify.hpp"
#include "qpc/duality.hpp"
#include "qpc/families.hpp"
#include "qpc/io.hpp"
#include "qpc/table.hpp"

namespace qpc {

enum class CheckStatus { pass, fail, budget };

inline std::string_view status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::budget: return "budget";
    }
    return "?";
}

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
    std::optional<std::int64_t> count;
    double seconds = 0;
};

struct VerifyOptions {
    bool families = true;
    bool table = true;
    bool one_interior = true;
    bool extremal = true;
    bool duality = true;
    bool membership = true;
    /// Every cell of both census tables instead of the desk-scale ones.
    /// Minutes of runtime and over a gigabyte of memory.
    bool full_census = false;
    /// When set, only this denominator-2 cell is classified and reported.
    std::optional<std::pair<std::int64_t, std::int64_t>> cell;
    /// JSONL dataset expected to equal the one-interior classification.
    std::optional<std::string> fixture;
    EnumerationBudget budget;
    std::int64_t family_i_max = 20;
    std::int64_t family_d_max = 10;
    std::int64_t extremal_i_max = 8;
    std::int64_t membership_i_max = 50;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (c.status != CheckStatus::pass) return false;
        return true;
    }

    /// 1 on any mismatch, else 3 if a check ran out of budget, else 0.
    int exit_code() const {
        bool budget = false;
        for (const auto& c : checks) {
            if (c.status == CheckStatus::fail) return 1;
            if (c.status == CheckStatus::budget) budget = true;
        }
        return budget ? 3 : 0;
    }

    std::vector<std::string> failures() const {
        std::vector<std::string> out;
        for (const auto& c : checks)
            if (c.status == CheckStatus::fail) out.push_back(c.name);
        return out;
    }

    /// Timings are left out so that the summary is reproducible.
    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["schema_version"] = kSchemaVersion;
        j["ok"] = ok();
        j["exit_code"] = exit_code();
        j["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : checks) {
            nlohmann::ordered_json e;
            e["name"] = c.name;
            e["status"] = status_name(c.status);
            e["detail"] = c.detail;
            if (c.count) e["count"] = *c.count;
            j["checks"].push_back(std::move(e));
        }
        return j;
    }
};

/// The unique interior lattice point of P moved to the origin.
inline ConvexPolygon centered_one_interior(const ConvexPolygon& P) {
    for (const auto& p : lattice_points(P))
        if (strictly_inside(P, p)) return translate(P, Point(-p.x, -p.y));
    throw PreconditionViolated("polygon has no interior lattice point");
}

namespace detail {

template <typename Fn>
CheckResult timed_check(std::string name, Fn&& fn) {
    CheckResult r;
    r.name = std::move(name);
    auto t0 = std::chrono::steady_clock::now();
    try {
        fn(r);
    } catch (const BudgetExceeded& e) {
        r.status = CheckStatus::budget;
        r.detail = e.what();
    } catch (const std::exception& e) {
        r.status = CheckStatus::fail;
        r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

inline void fail(CheckResult& r, std::string why) {
    if (r.status == CheckStatus::fail) return;  // keep the first reason
    r.status = CheckStatus::fail;
    r.detail = std::move(why);
}

inline std::string cell_name(std::int64_t i, std::int64_t b) {
    return "(" + std::to_string(i) + "," + std::to_string(b) + ")";
}

inline CheckResult check_cell(std::int64_t d, std::int64_t i, std::int64_t b, const EnumerationBudget& budget) {
    return timed_check("table/d" + std::to_string(d) + cell_name(i, b), [&](CheckResult& r) {
        auto res = d == 1 ? enumerate_lattice_polygons(i, b, budget) : classify_half_integral_pips(i, b, budget);
        if (!res.complete) {
            r.status = CheckStatus::budget;
            r.detail = res.reason;
            return;
        }
        r.count = static_cast<std::int64_t>(res.records.size());
        auto want = d == 1 ? table::lattice_count(i, b) : table::half_integral_count(i, b);
        if (!want) {
            r.detail = "no reference value";
        } else if (*want != *r.count) {
            fail(r, "expected " + std::to_string(*want) + ", got " + std::to_string(*r.count));
        }
    });
}

inline std::vector<CheckResult> check_families(const VerifyOptions& o) {
    std::map<FamilyId, CheckResult> by_family;
    for (auto [id, name] : kFamilyNames) by_family[id].name = "families/" + std::string(name);
    std::map<FamilyId, std::int64_t> counted;
    for (const auto& spec : family_sweep(o.family_i_max, o.family_d_max)) {
        auto& r = by_family[spec.id];
        auto t0 = std::chrono::steady_clock::now();
        auto rep = verify_family(spec);
        r.seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        ++counted[spec.id];
        if (!rep.matches())
            fail(r, "i=" + std::to_string(spec.i) + " b=" + std::to_string(spec.b) + " a=" + std::to_string(spec.a) +
                        " d=" + std::to_string(spec.d) + ": measured (" + std::to_string(rep.denominator) + "," +
                        std::to_string(rep.i) + "," + std::to_string(rep.b) + "," + to_string(rep.area) + ")");
    }
    std::vector<CheckResult> out;
    for (auto [id, name] : kFamilyNames) {
        auto r = by_family[id];
        r.count = counted[id];
        if (r.status == CheckStatus::pass) {
            r.detail = std::to_string(counted[id]) + " members";
            if (id == FamilyId::Td_0d1) r.detail += " (conjecture)";
        }
        out.push_back(std::move(r));
    }
    return out;
}

inline std::vector<CheckResult> check_table(const VerifyOptions& o) {
    std::vector<CheckResult> out;
    // lattice rows are cheap enough to run whole up to i = 4
    const std::int64_t lattice_rows = o.full_census ? table::kMaxI : 4;
    for (std::int64_t i = 0; i <= lattice_rows; ++i)
        for (std::int64_t b = 3; b <= 2 * i + 7; ++b) out.push_back(check_cell(1, i, b, o.budget));
    std::int64_t total = 0;
    for (std::int64_t i = 0; i <= table::kMaxI; ++i)
        for (std::int64_t b = 2; b <= 2 * i + 7; ++b) {
            if (!o.full_census && !table::desk_scale(i, b)) break;
            out.push_back(check_cell(2, i, b, o.budget));
            total += out.back().count.value_or(0);
        }
    if (o.full_census) {
        CheckResult r;
        r.name = "table/d2/total";
        r.count = total;
        bool skipped = false;
        for (const auto& c : out) skipped = skipped || c.status == CheckStatus::budget;
        if (skipped) {
            r.status = CheckStatus::budget;
            r.detail = "some cells ran out of budget";
        } else if (total != table::kHalfIntegralTotal) {
            fail(r, "total " + std::to_string(total));
        }
        out.push_back(std::move(r));
    }
    return out;
}

inline CheckResult check_one_interior(const EnumerationBudget& budget) {
    return timed_check("one-interior", [&](CheckResult& r) {
        auto records = classify_one_interior().value();
        r.count = static_cast<std::int64_t>(records.size());
        std::vector<std::int64_t> hist(8, 0);
        std::set<ConvexPolygon> classes;
        for (const auto& rec : records) {
            if (rec.b >= 2 && rec.b <= 9) ++hist[rec.b - 2];
            classes.insert(rec.polygon);
        }
        if (hist != std::vector<std::int64_t>{6, 6, 4, 7, 3, 2, 1, 1}) fail(r, "histogram over b = 2..9 differs");
        std::set<ConvexPolygon> searched;
        for (std::int64_t b = 2; b <= 9; ++b)
            for (const auto& rec : classify_half_integral_pips(1, b, budget).value()) searched.insert(rec.polygon);
        if (searched != classes) fail(r, "differs from the union of the i = 1 cells");
        if (r.status == CheckStatus::pass) r.detail = "30 classes, equal to the searched cells";
    });
}

inline std::vector<CheckResult> check_extremal(const VerifyOptions& o) {
    std::vector<CheckResult> out;
    for (std::int64_t i = 1; i <= o.extremal_i_max; ++i)
        out.push_back(timed_check("extremal" + cell_name(i, 2 * i + 7), [&](CheckResult& r) {
            auto records = classify_extremal(i).value();
            r.count = static_cast<std::int64_t>(records.size());
            if (*r.count != extremal_class_count(i)) fail(r, "count differs from the closed formula");
            auto cell = table::half_integral_count(i, 2 * i + 7);
            if (cell && *cell != *r.count) fail(r, "count differs from the table cell");
            for (const auto& rec : records)
                if (rec.i != i || rec.b != 2 * i + 7 || !rec.pseudo_integral) fail(r, "member with wrong invariants");
            for (std::size_t a = 0; a < records.size(); ++a)
                for (std::size_t c = a + 1; c < records.size(); ++c)
                    if (records[a].polygon == records[c].polygon) fail(r, "repeated class");
        }));
    return out;
}

inline CheckResult check_duality_instance(const std::string& name, const ConvexPolygon& P, bool reflexive) {
    return timed_check(name, [&](CheckResult& r) {
        auto rep = dual_report(P);
        if (!rep.is_lattice_dual || !rep.is_fano_dual) {
            fail(r, "dual is not an LDP polygon");
            return;
        }
        auto ldp = is_ldp(rep.dual);
        if (!ldp || ldp.gorenstein_index > 2) fail(r, "dual is not LDP of Gorenstein index <= 2");
        auto bsum = boundary_sum_identity(P);
        if (!bsum.holds()) fail(r, "b(P)+b(P*) = " + to_string(bsum.lhs) + " but 12+(i(P*)-1) = " + to_string(bsum.rhs));
        auto st = stringy_identity(P);
        if (!st.holds()) fail(r, "area identity: " + to_string(st.lhs) + " != " + to_string(st.rhs));
        if (st.equality_at_12 != reflexive || st.reflexive != reflexive) fail(r, "equality at 12 does not track reflexivity");
        if (!one_interior_pip_dual_theorem(P).all()) fail(r, "the five equivalent conditions do not all hold");
    });
}

inline std::vector<CheckResult> check_duality(const EnumerationBudget& budget) {
    std::vector<CheckResult> out;
    auto one = classify_one_interior().value();
    for (std::size_t k = 0; k < one.size(); ++k)
        out.push_back(check_duality_instance("duality/one-interior/" + std::to_string(k),
                                             centered_one_interior(one[k].polygon), false));
    std::size_t k = 0;
    for (std::int64_t b = 3; b <= 9; ++b)
        for (const auto& rec : enumerate_lattice_polygons(1, b, budget).value())
            out.push_back(check_duality_instance("duality/reflexive/" + std::to_string(k++),
                                                 centered_one_interior(rec.polygon), true));
    if (k != 16) {
        CheckResult r;
        r.name = "duality/reflexive-count";
        fail(r, "expected 16, found " + std::to_string(k));
        out.push_back(std::move(r));
    }
    return out;
}

inline CheckResult check_membership(const VerifyOptions& o) {
    return timed_check("membership", [&](CheckResult& r) {
        for (std::int64_t i = 1; i <= o.membership_i_max; ++i)
            if (!is_ehrhart_polynomial_half_integral_pip(make_rational(4 * i + 5, 2), make_rational(2 * i + 7, 2), 1))
                fail(r, "extremal polynomial rejected at i = " + std::to_string(i));
        std::int64_t cells = 0;
        for (std::int64_t i = 0; i <= table::kMaxI; ++i)
            for (std::int64_t b = 2; b <= 2 * i + 12; ++b) {
                auto want = table::half_integral_count(i, b);
                if (!want) continue;
                Rational e2 = Rational(i) + make_rational(b, 2) - 1, e1 = make_rational(b, 2);
                bool member = bool(is_ehrhart_polynomial_half_integral_pip(e2, e1, 1));
                if (member != (*want > 0)) fail(r, "predicate disagrees with the census at " + cell_name(i, b));
                ++cells;
            }
        r.count = cells;
        if (r.status == CheckStatus::pass) r.detail = std::to_string(cells) + " cells agree";
    });
}

inline CheckResult check_fixture(const std::string& path) {
    return timed_check("fixture", [&](CheckResult& r) {
        auto rows = read_dataset(path);
        r.count = static_cast<std::int64_t>(rows.size());
        auto want = to_rows(classify_one_interior().value());
        if (rows.size() != want.size()) {
            fail(r, path + ": " + std::to_string(rows.size()) + " rows, expected " + std::to_string(want.size()));
            return;
        }
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (rows[k] != want[k]) {
                fail(r, path + ": row " + std::to_string(k) + " differs");
                return;
            }
        r.detail = path;
    });
}

}  // namespace detail

inline VerifyReport verify_all(const VerifyOptions& o) {
    VerifyReport rep;
    auto add = [&](std::vector<CheckResult> v) {
        for (auto& c : v) rep.checks.push_back(std::move(c));
    };
    if (o.cell) {
        auto [i, b] = *o.cell;
        rep.checks.push_back(detail::check_cell(2, i, b, o.budget));
        if (o.fixture) rep.checks.push_back(detail::check_fixture(*o.fixture));
        return rep;
    }
    if (o.families) add(detail::check_families(o));
    if (o.table) add(detail::check_table(o));
    if (o.one_interior) rep.checks.push_back(detail::check_one_interior(o.budget));
    if (o.extremal) add(detail::check_extremal(o));
    if (o.duality) add(detail::check_duality(o.budget));
    if (o.membership) rep.checks.push_back(detail::check_membership(o));
    if (o.fixture) rep.checks.push_back(detail::check_fixture(*o.fixture));
    return rep;
}

}  // namespace qpc
