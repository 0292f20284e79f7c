#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "qpc/io.hpp"
#include "qpc/svg.hpp"

using namespace qpc;

namespace {

std::vector<DatasetRow> round_trip(const std::vector<DatasetRow>& rows) {
    std::stringstream s;
    write_dataset(s, rows);
    return read_dataset(s);
}

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
    return n;
}

}  // namespace

TEST(Dataset, OneInteriorRoundTrip) {
    auto records = classify_one_interior().value();
    auto rows = to_rows(records);
    auto back = round_trip(rows);
    EXPECT_EQ(back, rows);
    ASSERT_EQ(back.size(), 30u);
    for (std::size_t k = 0; k < back.size(); ++k) EXPECT_EQ(record_from_row(back[k], k), records[k]);
}

TEST(Dataset, FrozenFixtureMatchesClassification) {
    auto rows = read_dataset(data_path("one_interior.jsonl"));
    EXPECT_EQ(rows, to_rows(classify_one_interior().value()));
}

TEST(Dataset, EmptyFile) {
    std::stringstream s;
    write_dataset(s, {});
    EXPECT_TRUE(s.str().empty());
    EXPECT_TRUE(read_dataset(s).empty());
}

TEST(Dataset, FieldOrderIsFixed) {
    auto row = to_row(make_record(parse_polygon("(0,0);(2,0);(0,1/2)"), Provenance::enumerated));
    EXPECT_EQ(row_to_json(row).dump(),
              R"({"schema_version":1,"vertices":)" + nlohmann::json(row.vertices).dump() +
                  R"(,"denominator":2,"i":0,"b":3,"area":"1/2","period_sequence":[1,1,1],)"
                  R"("pseudo_integral":true,"provenance":"enumerated"})");
}

TEST(Dataset, TamperedRowsAreRejected) {
    auto rows = to_rows(classify_extremal(2).value());
    {
        auto bad = rows;
        bad[1].area = "100/1";
        std::stringstream s;
        write_dataset(s, bad);
        try {
            read_dataset(s);
            FAIL() << "accepted a tampered area";
        } catch (const RowInvariantViolated& e) {
            EXPECT_EQ(e.row(), 1u);
            EXPECT_NE(std::string(e.what()).find("area"), std::string::npos);
        }
        std::stringstream t;
        write_dataset(t, bad);
        EXPECT_EQ(read_dataset(t, false).size(), rows.size());
    }
    auto reject = [&](auto mutate) {
        auto bad = rows;
        mutate(bad[0]);
        std::stringstream s;
        write_dataset(s, bad);
        EXPECT_THROW(read_dataset(s), RowInvariantViolated);
    };
    reject([](DatasetRow& r) { r.i += 1; });
    reject([](DatasetRow& r) { r.b -= 1; });
    reject([](DatasetRow& r) { r.denominator = 1; });
    reject([](DatasetRow& r) { r.period_sequence[1] = 2; });
    reject([](DatasetRow& r) { r.pseudo_integral = false; });
    reject([](DatasetRow& r) { r.provenance = "guessed"; });
    // a valid polygon that is not in canonical form
    reject([](DatasetRow& r) {
        r.vertices = format_polygon(translate(parse_polygon(r.vertices), Point(5, 7)));
    });
}

TEST(Dataset, SchemaMismatch) {
    std::stringstream a(R"j({"schema_version":2,"vertices":"(0,0);(1,0);(0,1)"})j" "\n");
    EXPECT_THROW(read_dataset(a), SchemaMismatch);
    std::stringstream b(R"j({"vertices":"(0,0);(1,0);(0,1)"})j" "\n");
    EXPECT_THROW(read_dataset(b), SchemaMismatch);
    std::stringstream c(R"j({"schema_version":1,"vertices":"(0,0);(1,0);(0,1)"})j" "\n");
    EXPECT_THROW(read_dataset(c), SchemaMismatch);
    std::stringstream d("not json\n");
    EXPECT_THROW(read_dataset(d), SchemaMismatch);
    EXPECT_THROW(read_dataset(std::string("/nonexistent/qpc.jsonl")), IoError);
}

TEST(Dataset, RandomRoundTrip) {
    std::mt19937_64 rng(7);
    std::vector<ClassificationRecord> records;
    for (int n = 0; n < 1000; ++n) records.push_back(make_record(oracle::random_polygon(rng, 8, 4), Provenance::family));
    auto rows = to_rows(records);
    auto back = round_trip(rows);
    ASSERT_EQ(back, rows);
    for (std::size_t k = 0; k < back.size(); ++k) ASSERT_EQ(record_from_row(back[k], k), records[k]) << k;
}

TEST(Import, ReflexivePolygons) {
    auto r = import_vertex_list(data_path("reflexive16.txt"), VertexListFormat::plain);
    EXPECT_EQ(r.polygons.size(), 16u);
    EXPECT_TRUE(r.duplicates.empty());
}

TEST(Import, DuplicatesAreReported) {
    std::stringstream s("# two copies of one triangle\n(0,0);(1,0);(0,1)\n\n(3,3);(4,3);(3,2)\n");
    auto r = import_vertex_list(s, VertexListFormat::plain);
    ASSERT_EQ(r.polygons.size(), 2u);
    ASSERT_EQ(r.duplicates.size(), 1u);
    EXPECT_EQ(r.duplicates[0], (std::pair<std::size_t, std::size_t>{0, 1}));
}

TEST(Import, MalformedLineNamesTheLine) {
    std::stringstream s("(0,0);(1,0);(0,1)\n(0,0);(1,x);(0,1)\n");
    try {
        import_vertex_list(s, VertexListFormat::plain);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
    std::stringstream t("(0,0);(1,0);(0,1)\n\n(0,0);(1,1);(2,2)\n");
    try {
        import_vertex_list(t, VertexListFormat::plain);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(Import, Json) {
    std::stringstream s(R"([[[0,0],[2,0],[0,"1/2"]], [[1,1],[1,3],["3/2",1]]])");
    auto r = import_vertex_list(s, VertexListFormat::json);
    ASSERT_EQ(r.polygons.size(), 2u);
    EXPECT_EQ(r.polygons[0].denominator(), 2);
    EXPECT_EQ(r.duplicates.size(), 1u);
    std::stringstream bad(R"([[[0,0],[1,0],[0,1.5]]])");
    EXPECT_THROW(import_vertex_list(bad, VertexListFormat::json), ParseError);
    std::stringstream notarray(R"({"a":1})");
    EXPECT_THROW(import_vertex_list(notarray, VertexListFormat::json), ParseError);
}

TEST(Svg, LatticePointsAndPaths) {
    RenderSpec spec;
    spec.polygons = {parse_polygon("(0,0);(2,0);(0,1/2)")};
    auto svg = render_svg(spec);
    EXPECT_EQ(count(svg, "<circle"), 3u);
    EXPECT_EQ(count(svg, "<path"), 1u);
    EXPECT_EQ(svg, render_svg(spec));

    RenderSpec ext;
    for (const auto& r : classify_extremal(3).value()) ext.polygons.push_back(r.polygon);
    auto e = render_svg(ext);
    EXPECT_EQ(count(e, "<path"), 4u);
    std::size_t points = 0;
    for (const auto& P : ext.polygons) points += lattice_points(P).size();
    EXPECT_EQ(count(e, "<circle"), points);

    ext.highlight_lattice_points = false;
    EXPECT_EQ(count(render_svg(ext), "<circle"), 0u);
}

TEST(Svg, YAxisPointsUp) {
    RenderSpec spec;
    spec.polygons = {parse_polygon("(0,0);(1,0);(0,1)")};
    spec.grid = GridBox{0, 0, 2, 2};
    spec.scale = 10;
    auto svg = render_svg(spec);
    // (0,1) is drawn above (0,0)
    EXPECT_NE(svg.find("M 0 20 L 10 20 L 0 10 Z"), std::string::npos) << svg;
    EXPECT_NE(svg.find("width=\"20\""), std::string::npos);
}
