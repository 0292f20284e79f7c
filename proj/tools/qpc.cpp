#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qpc/classify.hpp"
#include "qpc/duality.hpp"
#include "qpc/families.hpp"
#include "qpc/io.hpp"
#include "qpc/svg.hpp"
#include "qpc/verify.hpp"

using namespace qpc;
using json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kBudget = 3 };

struct Globals {
    std::string format = "text";
    std::string out;
    std::int64_t budget_points = EnumerationBudget{}.max_lattice_points;
    std::int64_t max_nodes = EnumerationBudget{}.max_nodes;
    std::int64_t time_limit_ms = 0;
    int jobs = 1;

    bool as_json() const { return format == "json"; }

    EnumerationBudget budget() const {
        EnumerationBudget b;
        b.max_lattice_points = budget_points;
        b.max_nodes = max_nodes;
        b.time_limit = std::chrono::milliseconds(time_limit_ms);
        b.jobs = jobs;
        return b;
    }
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_text(const Globals& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw IoError("cannot open " + g.out + " for writing");
    f << text;
}

void emit(const Globals& g, const json& j, const std::string& text) {
    write_text(g, g.as_json() ? j.dump(2) + "\n" : text);
}

/// Inline polygon text, or @path naming a file whose non-comment lines hold it.
ConvexPolygon polygon_arg(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return parse_polygon(arg);
    std::ifstream in(arg.substr(1));
    if (!in) throw IoError("cannot open " + arg.substr(1));
    std::string text, line;
    std::size_t lineno = 0, first = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        if (!first) first = lineno;
        text += line + ' ';
    }
    return parse_polygon(text, first ? first : 1);
}

std::string q(const Rational& r) { return to_string(r); }

json quasi_json(const QuasiPolynomial& qp) {
    json rows = json::array();
    for (const auto& c : qp.coeffs) rows.push_back({q(c[0]), q(c[1]), q(c[2])});
    return {{"period", qp.period()}, {"period_sequence", qp.period_sequence}, {"coefficients", rows}};
}

std::string quasi_text(const QuasiPolynomial& qp) {
    std::ostringstream o;
    o << "period sequence  (" << qp.period_sequence[0] << "," << qp.period_sequence[1] << ","
      << qp.period_sequence[2] << ")\n";
    for (std::int64_t r = 0; r < qp.period(); ++r) {
        const auto& c = qp.coeffs[r];
        o << "  t = " << r << " mod " << qp.period() << ":  " << q(c[2]) << " t^2 + " << q(c[1]) << " t + "
          << q(c[0]) << "\n";
    }
    return o.str();
}

json record_json(const ClassificationRecord& r) { return row_to_json(to_row(r)); }

std::string records_text(const std::vector<ClassificationRecord>& rs) {
    std::ostringstream o;
    for (const auto& r : rs)
        o << format_polygon(r.polygon) << "  d=" << r.denominator << " i=" << r.i << " b=" << r.b
          << " area=" << q(r.area) << "\n";
    return o.str();
}

int cmd_analyze(const Globals& g, const std::string& arg) {
    auto P = polygon_arg(arg);
    auto c = count_lattice_points(P);
    auto e = ehrhart_general(P);
    auto pi = pseudo_integrality(P);
    auto canon = canonical_form(P).polygon;
    MembershipResult m;
    if (P.denominator() == 1) m = is_ehrhart_polynomial_lattice(area(P), make_rational(c.boundary, 2), 1);
    if (P.denominator() == 2) m = is_ehrhart_polynomial_half_integral_pip(area(P), make_rational(c.boundary, 2), 1);

    json j{{"vertices", format_polygon(P)},
           {"canonical", format_polygon(canon)},
           {"denominator", to_i64(P.denominator())},
           {"i", c.interior},
           {"b", c.boundary},
           {"area", q(area(P))},
           {"ehrhart", quasi_json(e)},
           {"obeys_pick", pi.obeys_pick},
           {"lattice_point_on_every_edge", pi.lattice_point_on_every_edge},
           {"pseudo_integral", pi.is_pseudo_integral},
           {"membership", P.denominator() <= 2 ? json(m.member) : json(nullptr)}};
    std::ostringstream o;
    o << "vertices         " << format_polygon(P) << "\n"
      << "canonical        " << format_polygon(canon) << "\n"
      << "denominator      " << P.denominator() << "\n"
      << "interior i       " << c.interior << "\n"
      << "boundary b       " << c.boundary << "\n"
      << "area             " << q(area(P)) << "\n"
      << "pseudo-integral  " << (pi.is_pseudo_integral ? "yes" : "no") << "\n"
      << "Pick holds       " << (pi.obeys_pick ? "yes" : "no") << "\n"
      << "lattice point on every edge  " << (pi.lattice_point_on_every_edge ? "yes" : "no") << "\n";
    if (P.denominator() <= 2) o << "membership       " << (m.member ? "yes" : "no") << "\n";
    o << quasi_text(e);
    emit(g, j, o.str());
    return kOk;
}

int cmd_ehrhart(const Globals& g, const std::string& arg, std::int64_t values, std::int64_t reciprocity) {
    auto P = polygon_arg(arg);
    auto e = ehrhart_general(P);
    json j = quasi_json(e);
    std::ostringstream o;
    o << quasi_text(e);
    if (values > 0) {
        json vs = json::array();
        o << "values          ";
        for (std::int64_t t = 1; t <= values; ++t) {
            vs.push_back(q(e(t)));
            o << " " << q(e(t));
        }
        o << "\n";
        j["values"] = vs;
    }
    int rc = kOk;
    if (reciprocity > 0) {
        bool ok = check_reciprocity(P, reciprocity);
        j["reciprocity"] = {{"k_max", reciprocity}, {"holds", ok}};
        o << "reciprocity k <= " << reciprocity << "  " << (ok ? "holds" : "FAILS") << "\n";
        if (!ok) rc = kMismatch;
    }
    emit(g, j, o.str());
    return rc;
}

int cmd_dual(const Globals& g, const std::string& arg) {
    auto P = polygon_arg(arg);
    auto rep = dual_report(P);
    json j{{"dual", format_polygon(rep.dual)},
           {"lattice_dual", rep.is_lattice_dual},
           {"fano_dual", rep.is_fano_dual},
           {"gorenstein_index", rep.gorenstein_index ? json(*rep.gorenstein_index) : json(nullptr)}};
    std::ostringstream o;
    o << "dual             " << format_polygon(rep.dual) << "\n"
      << "lattice dual     " << (rep.is_lattice_dual ? "yes" : "no") << "\n"
      << "dual is LDP      " << (rep.is_fano_dual ? "yes" : "no") << "\n";
    if (rep.gorenstein_index) o << "Gorenstein index " << *rep.gorenstein_index << "\n";

    auto c = count_lattice_points(P);
    if (P.denominator() <= 2 && c.interior == 1) {
        auto t = one_interior_pip_dual_theorem(P);
        j["one_interior_conditions"] = {{"dual_is_ldp", t.dual_is_ldp},
                                        {"unit_edge_distances", t.unit_edge_distances},
                                        {"counts_shift", t.counts_shift_and_edge_lines},
                                        {"ehrhart_1_A_A", t.ehrhart_area_area_one},
                                        {"pseudo_integral", t.unique_interior_point_and_pseudo_integral}};
        o << "one-interior conditions " << (t.all() ? "all hold" : "none hold") << "\n";
        if (t.all()) {
            auto bs = boundary_sum_identity(P);
            auto st = stringy_identity(P);
            j["boundary_sum"] = {{"lhs", q(bs.lhs)}, {"rhs", q(bs.rhs)}};
            j["area_identity"] = {{"lhs", q(st.lhs)}, {"rhs", q(st.rhs)}, {"reflexive", st.reflexive}};
            o << "b(P)+b(P*)       " << q(bs.lhs) << " = 12+(i(P*)-1) = " << q(bs.rhs) << "\n"
              << "2(A(P)+A(P*))    " << q(st.lhs) << " = " << q(st.rhs) << "\n";
        }
    }
    emit(g, j, o.str());
    return kOk;
}

FamilySpec parse_family(const std::string& id, const std::string& params) {
    auto f = family_from_name(id);
    if (!f) throw UsageError("unknown family '" + id + "'");
    FamilySpec s{*f};
    std::stringstream ss(params);
    for (std::string kv; std::getline(ss, kv, ',');) {
        if (kv.empty()) continue;
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw UsageError("parameter '" + kv + "' is not key=value");
        auto key = kv.substr(0, eq);
        std::int64_t v;
        try {
            v = std::stoll(kv.substr(eq + 1));
        } catch (const std::exception&) {
            throw UsageError("parameter '" + kv + "' needs an integer value");
        }
        if (key == "i") s.i = v;
        else if (key == "b") s.b = v;
        else if (key == "a") s.a = v;
        else if (key == "d") s.d = v;
        else throw UsageError("unknown parameter '" + key + "'");
    }
    return s;
}

json family_json(const FamilyReport& r) {
    return {{"family", family_name(r.spec.id)},
            {"params", {{"i", r.spec.i}, {"b", r.spec.b}, {"a", r.spec.a}, {"d", r.spec.d}}},
            {"polygon", format_polygon(r.polygon)},
            {"claimed",
             {{"denominator", r.claimed.denominator},
              {"i", r.claimed.i},
              {"b", r.claimed.b},
              {"area", q(r.claimed.area)},
              {"conjecture", r.claimed.conjecture}}},
            {"measured",
             {{"denominator", r.denominator},
              {"i", r.i},
              {"b", r.b},
              {"area", q(r.area)},
              {"pseudo_integral", r.pseudo_integral}}},
            {"matches", r.matches()}};
}

int cmd_families(const Globals& g, const std::string& id, const std::string& params, bool all, std::int64_t i_max,
                 std::int64_t d_max) {
    if (all) {
        json rows = json::array();
        std::ostringstream o;
        std::int64_t bad = 0, n = 0;
        for (const auto& s : family_sweep(i_max, d_max)) {
            auto r = verify_family(s);
            ++n;
            if (!r.matches()) {
                ++bad;
                o << "MISMATCH " << family_name(s.id) << " " << format_polygon(r.polygon) << "\n";
            }
            rows.push_back(family_json(r));
        }
        o << n << " family members checked, " << bad << " mismatches\n";
        emit(g, {{"checked", n}, {"mismatches", bad}, {"members", rows}}, o.str());
        return bad ? kMismatch : kOk;
    }
    if (id.empty()) {
        json names = json::array();
        std::string text;
        for (auto [f, name] : kFamilyNames) {
            names.push_back(name);
            text += std::string(name) + "\n";
        }
        emit(g, {{"families", names}}, text);
        return kOk;
    }
    auto r = verify_family(parse_family(id, params));
    std::ostringstream o;
    o << family_name(r.spec.id) << "  " << format_polygon(r.polygon) << "\n"
      << "claimed   d=" << r.claimed.denominator << " i=" << r.claimed.i << " b=" << r.claimed.b
      << " area=" << q(r.claimed.area) << (r.claimed.conjecture ? "  (conjecture)" : "") << "\n"
      << "measured  d=" << r.denominator << " i=" << r.i << " b=" << r.b << " area=" << q(r.area)
      << " pseudo-integral=" << (r.pseudo_integral ? "yes" : "no") << "\n"
      << (r.matches() ? "match" : "MISMATCH") << "\n";
    emit(g, family_json(r), o.str());
    return r.matches() ? kOk : kMismatch;
}

/// Prints a summary (or JSON) and writes JSONL rows to `dataset` if given.
int report_records(const Globals& g, const ClassificationResult& res, const std::string& dataset, json header) {
    if (!res.complete) {
        header["complete"] = false;
        header["reason"] = res.reason;
        emit(g, header, "incomplete: " + res.reason + "\n");
        return kBudget;
    }
    if (!dataset.empty()) write_dataset(dataset, to_rows(res.records));
    header["complete"] = true;
    header["count"] = res.records.size();
    json rows = json::array();
    for (const auto& r : res.records) rows.push_back(record_json(r));
    header["records"] = rows;
    emit(g, header, std::to_string(res.records.size()) + " classes\n" + records_text(res.records));
    return kOk;
}

int cmd_import(const Globals& g, const std::string& path, bool as_json_input) {
    auto r = import_vertex_list(path, as_json_input ? VertexListFormat::json : VertexListFormat::plain);
    json polys = json::array(), dups = json::array();
    std::ostringstream o;
    for (const auto& P : r.polygons) {
        polys.push_back(format_polygon(P));
        o << format_polygon(P) << "\n";
    }
    for (auto [a, b] : r.duplicates) {
        dups.push_back({a, b});
        o << "duplicate: entry " << b << " is equivalent to entry " << a << "\n";
    }
    o << r.polygons.size() << " polygons, " << r.duplicates.size() << " duplicates\n";
    emit(g, {{"polygons", polys}, {"duplicates", dups}}, o.str());
    return kOk;
}

GridBox parse_grid(const std::string& s) {
    std::array<std::int64_t, 4> v{};
    std::stringstream ss(s);
    std::string part;
    for (int k = 0; k < 4; ++k) {
        if (!std::getline(ss, part, ',')) throw UsageError("--grid needs xmin,ymin,xmax,ymax");
        v[k] = std::stoll(part);
    }
    return {v[0], v[1], v[2], v[3]};
}

int cmd_render(const Globals& g, const std::vector<std::string>& polys, const std::string& dataset,
               std::int64_t extremal, const std::string& grid, bool no_points, int scale) {
    RenderSpec spec;
    for (const auto& p : polys) spec.polygons.push_back(polygon_arg(p));
    if (!dataset.empty())
        for (const auto& row : read_dataset(dataset)) spec.polygons.push_back(parse_polygon(row.vertices));
    if (extremal > 0)
        for (const auto& r : classify_extremal(extremal).value()) spec.polygons.push_back(r.polygon);
    if (spec.polygons.empty()) throw UsageError("render needs at least one polygon");
    if (!grid.empty()) spec.grid = parse_grid(grid);
    spec.highlight_lattice_points = !no_points;
    spec.scale = scale;
    write_text(g, render_svg(spec));
    return kOk;
}

int cmd_verify(const Globals& g, const std::string& cell, const std::string& fixture, const std::string& scope,
               bool budget_given) {
    VerifyOptions o;
    o.budget = g.budget();
    if (!fixture.empty()) o.fixture = fixture;
    if (!cell.empty()) {
        auto comma = cell.find(',');
        if (comma == std::string::npos) throw UsageError("--cell needs i,b");
        try {
            o.cell = std::pair{std::stoll(cell.substr(0, comma)), std::stoll(cell.substr(comma + 1))};
        } catch (const std::exception&) {
            throw UsageError("--cell needs integers i,b");
        }
    }
    if (!scope.empty()) {
        o.families = o.table = o.one_interior = o.extremal = o.duality = o.membership = false;
        std::stringstream ss(scope);
        for (std::string s; std::getline(ss, s, ',');) {
            if (s == "families") o.families = true;
            else if (s == "table") o.table = true;
            else if (s == "one-interior") o.one_interior = true;
            else if (s == "extremal") o.extremal = true;
            else if (s == "duality") o.duality = true;
            else if (s == "membership") o.membership = true;
            else if (s == "census") {
                o.table = o.full_census = true;
                // the largest cell, (6,19), doubles to 78 lattice points
                if (!budget_given) o.budget.max_lattice_points = std::max<std::int64_t>(o.budget.max_lattice_points, 78);
            }
            else throw UsageError("unknown scope '" + s + "'");
        }
    }
    auto rep = verify_all(o);
    std::ostringstream t;
    std::size_t passed = 0;
    for (const auto& c : rep.checks) {
        if (c.status == CheckStatus::pass) ++passed;
        if (c.status != CheckStatus::pass || o.cell)
            t << (c.status == CheckStatus::pass ? "PASS" : c.status == CheckStatus::fail ? "FAIL" : "BUDGET") << "  "
              << c.name << (c.count ? "  count=" + std::to_string(*c.count) : "") << "  " << c.detail << "\n";
    }
    t << passed << "/" << rep.checks.size() << " checks passed\n";
    emit(g, rep.to_json(), t.str());
    return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rational polygons, Ehrhart quasi-polynomials and pseudo-integral polygon classification"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", g.out, "Write output (or the dataset, for classify/enumerate) to PATH");
    app.add_option("--budget-points", g.budget_points, "Largest lattice point count a search may visit");
    app.add_option("--max-nodes", g.max_nodes, "Search node limit");
    app.add_option("--time-limit", g.time_limit_ms, "Search time limit in milliseconds (0: none)");
    app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1, 256));

    std::string poly;
    auto* analyze = app.add_subcommand("analyze", "Invariants of a polygon");
    analyze->add_option("polygon", poly, "Polygon text or @file")->required();

    std::int64_t values = 0, reciprocity = 0;
    auto* ehrhart = app.add_subcommand("ehrhart", "Ehrhart quasi-polynomial of a polygon");
    ehrhart->add_option("polygon", poly, "Polygon text or @file")->required();
    ehrhart->add_option("--values", values, "Also print ehr(t) for t = 1..N");
    ehrhart->add_option("--reciprocity", reciprocity, "Check reciprocity for k = 1..K");

    auto* dualc = app.add_subcommand("dual", "Dual polygon and duality identities");
    dualc->add_option("polygon", poly, "Polygon text or @file (origin in the interior)")->required();

    std::string fam_id, fam_params;
    bool fam_all = false;
    std::int64_t fam_i_max = 20, fam_d_max = 10;
    auto* families = app.add_subcommand("families", "Generate and verify polygon families");
    families->add_option("--id", fam_id, "Family name (omit to list)");
    families->add_option("--params", fam_params, "Parameters, e.g. i=2,b=5");
    families->add_flag("--all", fam_all, "Verify every family member up to --i-max/--d-max");
    families->add_option("--i-max", fam_i_max, "Largest i for --all");
    families->add_option("--d-max", fam_d_max, "Largest d for --all");

    std::int64_t ci = -1, cb = -1, cden = 2, cext = 0;
    bool one_interior = false;
    auto* enumerate = app.add_subcommand("enumerate", "Lattice polygons with given (i, b)");
    enumerate->add_option("--i", ci, "Interior lattice points")->required();
    enumerate->add_option("--b", cb, "Boundary lattice points")->required();

    auto* classify = app.add_subcommand("classify", "Pseudo-integral polygons with given (i, b)");
    auto* opt_i = classify->add_option("--i", ci, "Interior lattice points");
    auto* opt_b = classify->add_option("--b", cb, "Boundary lattice points");
    classify->add_option("--denominator", cden, "1 (lattice) or 2")->check(CLI::IsMember({1, 2}));
    auto* opt_one = classify->add_flag("--one-interior", one_interior, "The one-interior-point classification");
    auto* opt_ext = classify->add_option("--extremal", cext, "The classes with b = 2i+7 for this i");
    opt_i->needs(opt_b);
    opt_b->needs(opt_i);
    opt_one->excludes(opt_i)->excludes(opt_ext);
    opt_ext->excludes(opt_i);

    std::vector<std::string> render_polys;
    std::string render_dataset, render_grid;
    std::int64_t render_ext = 0;
    bool no_points = false;
    int scale = 40;
    auto* render = app.add_subcommand("render", "SVG figure of polygons on the integer grid");
    render->add_option("polygons", render_polys, "Polygon texts or @files");
    render->add_option("--dataset", render_dataset, "Render every row of a JSONL dataset");
    render->add_option("--extremal", render_ext, "Render the extremal classes for this i");
    render->add_option("--grid", render_grid, "xmin,ymin,xmax,ymax");
    render->add_flag("--no-points", no_points, "Omit lattice point disks");
    render->add_option("--scale", scale, "Pixels per unit")->check(CLI::Range(1, 1000));

    std::string cell, fixture, scope;
    auto* verify = app.add_subcommand("verify", "Run the verification suites");
    verify->add_option("--cell", cell, "Classify one denominator-2 cell i,b and compare with the census");
    verify->add_option("--fixture", fixture, "JSONL dataset expected to equal the one-interior classification");
    verify->add_option("--scope", scope, "Comma list of families,table,one-interior,extremal,duality,membership,census");

    std::string import_path;
    bool import_json = false;
    auto* import = app.add_subcommand("import", "Import an external vertex list and report duplicates");
    import->add_option("path", import_path, "File to import")->required();
    import->add_flag("--json", import_json, "JSON input instead of one polygon per line");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*analyze) return cmd_analyze(g, poly);
        if (*ehrhart) return cmd_ehrhart(g, poly, values, reciprocity);
        if (*dualc) return cmd_dual(g, poly);
        if (*families) return cmd_families(g, fam_id, fam_params, fam_all, fam_i_max, fam_d_max);
        if (*enumerate) {
            std::string dataset = g.out;
            Globals shown = g;
            shown.out.clear();
            return report_records(shown, enumerate_lattice_polygons(ci, cb, g.budget()), dataset,
                                  {{"i", ci}, {"b", cb}, {"denominator", 1}});
        }
        if (*classify) {
            std::string dataset = g.out;
            Globals shown = g;
            shown.out.clear();
            if (one_interior)
                return report_records(shown, classify_one_interior(), dataset, {{"mode", "one-interior"}});
            if (cext > 0)
                return report_records(shown, classify_extremal(cext), dataset, {{"mode", "extremal"}, {"i", cext}});
            if (ci < 0) throw UsageError("classify needs --i and --b, --one-interior, or --extremal");
            auto res = cden == 1 ? enumerate_lattice_polygons(ci, cb, g.budget())
                                 : classify_half_integral_pips(ci, cb, g.budget());
            return report_records(shown, res, dataset, {{"i", ci}, {"b", cb}, {"denominator", cden}});
        }
        if (*render) return cmd_render(g, render_polys, render_dataset, render_ext, render_grid, no_points, scale);
        if (*verify) return cmd_verify(g, cell, fixture, scope, app.get_option("--budget-points")->count() > 0);
        if (*import) return cmd_import(g, import_path, import_json);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const RowInvariantViolated& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMismatch;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return kMismatch;
    }
    return kUsage;
}
