#pragma once

// JSON-lines datasets of classification records and import of external
// vertex lists.

#include <array>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qpc/classify.hpp"
#include "qpc/text.hpp"

namespace qpc {

inline constexpr int kSchemaVersion = 1;

struct DatasetRow {
    int schema_version = kSchemaVersion;
    std::string vertices;
    std::int64_t denominator = 1;
    std::int64_t i = 0;
    std::int64_t b = 0;
    std::string area;
    std::array<std::int64_t, 3> period_sequence{1, 1, 1};
    bool pseudo_integral = true;
    std::string provenance;

    friend bool operator==(const DatasetRow&, const DatasetRow&) = default;
};

inline DatasetRow to_row(const ClassificationRecord& r) {
    DatasetRow row;
    row.vertices = format_polygon(r.polygon);
    row.denominator = r.denominator;
    row.i = r.i;
    row.b = r.b;
    row.area = num(r.area).str() + "/" + den(r.area).str();
    row.period_sequence = r.period_sequence;
    row.pseudo_integral = r.pseudo_integral;
    row.provenance = std::string(provenance_name(r.provenance));
    return row;
}

inline nlohmann::ordered_json row_to_json(const DatasetRow& row) {
    nlohmann::ordered_json j;
    j["schema_version"] = row.schema_version;
    j["vertices"] = row.vertices;
    j["denominator"] = row.denominator;
    j["i"] = row.i;
    j["b"] = row.b;
    j["area"] = row.area;
    j["period_sequence"] = row.period_sequence;
    j["pseudo_integral"] = row.pseudo_integral;
    j["provenance"] = row.provenance;
    return j;
}

/// Structural decoding only; `index` is reported in errors.
inline DatasetRow row_from_json(const nlohmann::json& j, std::size_t index) {
    if (!j.is_object()) throw SchemaMismatch("row " + std::to_string(index) + ": not an object");
    if (!j.contains("schema_version") || !j["schema_version"].is_number_integer())
        throw SchemaMismatch("row " + std::to_string(index) + ": missing schema_version");
    if (j["schema_version"].get<int>() != kSchemaVersion)
        throw SchemaMismatch("row " + std::to_string(index) + ": unsupported schema_version " +
                             j["schema_version"].dump());
    DatasetRow row;
    try {
        row.vertices = j.at("vertices").get<std::string>();
        row.denominator = j.at("denominator").get<std::int64_t>();
        row.i = j.at("i").get<std::int64_t>();
        row.b = j.at("b").get<std::int64_t>();
        row.area = j.at("area").get<std::string>();
        row.period_sequence = j.at("period_sequence").get<std::array<std::int64_t, 3>>();
        row.pseudo_integral = j.at("pseudo_integral").get<bool>();
        row.provenance = j.at("provenance").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw SchemaMismatch("row " + std::to_string(index) + ": " + e.what());
    }
    return row;
}

/// Rebuilds the record and checks every field against recomputation.
inline ClassificationRecord record_from_row(const DatasetRow& row, std::size_t index) {
    auto prov = provenance_from_name(row.provenance);
    if (!prov) throw RowInvariantViolated(index, "unknown provenance '" + row.provenance + "'");
    ConvexPolygon P = [&] {
        try {
            return parse_polygon(row.vertices);
        } catch (const Error& e) {
            throw RowInvariantViolated(index, std::string("vertices: ") + e.what());
        }
    }();
    Rational stated_area;
    try {
        stated_area = parse_rational(row.area);
    } catch (const ParseError&) {
        throw RowInvariantViolated(index, "area is not a rational");
    }
    auto rec = make_record(P, *prov);
    if (rec.polygon != P) throw RowInvariantViolated(index, "polygon is not in canonical form");
    if (rec.denominator != row.denominator) throw RowInvariantViolated(index, "denominator mismatch");
    if (rec.i != row.i) throw RowInvariantViolated(index, "i mismatch");
    if (rec.b != row.b) throw RowInvariantViolated(index, "b mismatch");
    if (rec.area != stated_area) throw RowInvariantViolated(index, "area mismatch");
    if (rec.period_sequence != row.period_sequence) throw RowInvariantViolated(index, "period_sequence mismatch");
    if (rec.pseudo_integral != row.pseudo_integral) throw RowInvariantViolated(index, "pseudo_integral mismatch");
    return rec;
}

inline void write_dataset(std::ostream& out, const std::vector<DatasetRow>& rows) {
    for (const auto& r : rows) out << row_to_json(r).dump() << '\n';
}

inline void write_dataset(const std::string& path, const std::vector<DatasetRow>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    write_dataset(out, rows);
    if (!out) throw IoError("write to " + path + " failed");
}

inline std::vector<DatasetRow> read_dataset(std::istream& in, bool validate = true) {
    std::vector<DatasetRow> rows;
    std::string line;
    std::size_t index = 0;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw SchemaMismatch("row " + std::to_string(index) + ": " + e.what());
        }
        auto row = row_from_json(j, index);
        if (validate) record_from_row(row, index);
        rows.push_back(std::move(row));
        ++index;
    }
    return rows;
}

inline std::vector<DatasetRow> read_dataset(const std::string& path, bool validate = true) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    return read_dataset(in, validate);
}

inline std::vector<DatasetRow> to_rows(const std::vector<ClassificationRecord>& records) {
    std::vector<DatasetRow> rows;
    rows.reserve(records.size());
    for (const auto& r : records) rows.push_back(to_row(r));
    return rows;
}

enum class VertexListFormat { plain, json };

struct ImportResult {
    std::vector<ConvexPolygon> polygons;
    /// (first occurrence, later equivalent occurrence), 0-based.
    std::vector<std::pair<std::size_t, std::size_t>> duplicates;
};

namespace detail {

inline Rational json_coordinate(const nlohmann::json& v, std::size_t index) {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw ParseError("coordinate must be an integer or a \"p/q\" string", 0, index + 1);
}

inline void find_duplicates(ImportResult& r) {
    std::map<ConvexPolygon, std::size_t> first;
    for (std::size_t k = 0; k < r.polygons.size(); ++k) {
        auto [it, fresh] = first.emplace(canonical_form(r.polygons[k]).polygon, k);
        if (!fresh) r.duplicates.emplace_back(it->second, k);
    }
}

}  // namespace detail

/// Plain: one polygon per line in the text format; blank lines and lines
/// starting with '#' are skipped. JSON: an array of polygons, each an array
/// of [x, y] pairs with integer or "p/q" coordinates. ParseError carries the
/// 1-based line (plain) or polygon index (json).
inline ImportResult import_vertex_list(std::istream& in, VertexListFormat format) {
    ImportResult r;
    if (format == VertexListFormat::plain) {
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            auto start = line.find_first_not_of(" \t\r");
            if (start == std::string::npos || line[start] == '#') continue;
            try {
                r.polygons.push_back(parse_polygon(line, lineno));
            } catch (const DegenerateInput& e) {
                throw ParseError(e.what(), 0, lineno);
            }
        }
    } else {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(e.what(), e.byte, 0);
        }
        if (!doc.is_array()) throw ParseError("expected an array of polygons", 0, 0);
        for (std::size_t k = 0; k < doc.size(); ++k) {
            const auto& poly = doc[k];
            if (!poly.is_array()) throw ParseError("polygon must be an array of points", 0, k + 1);
            std::vector<Point> pts;
            for (const auto& p : poly) {
                if (!p.is_array() || p.size() != 2) throw ParseError("point must be [x, y]", 0, k + 1);
                try {
                    pts.emplace_back(detail::json_coordinate(p[0], k), detail::json_coordinate(p[1], k));
                } catch (const ParseError& e) {
                    throw ParseError("malformed coordinate", e.offset(), k + 1);
                }
            }
            try {
                r.polygons.push_back(convex_hull(std::move(pts)));
            } catch (const DegenerateInput& e) {
                throw ParseError(e.what(), 0, k + 1);
            }
        }
    }
    detail::find_duplicates(r);
    return r;
}

inline ImportResult import_vertex_list(const std::string& path, VertexListFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    return import_vertex_list(in, format);
}

}  // namespace qpc
