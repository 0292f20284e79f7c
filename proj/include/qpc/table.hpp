#pragma once

// Published class counts for i <= 6: lattice polygons ("d = 1", b from 3)
// and half-integral pseudo-integral polygons ("d = 2", b from 2).

#include <cstdint>
#include <optional>
#include <vector>

namespace qpc::table {

inline const std::vector<std::vector<std::int64_t>>& lattice_rows() {
    static const std::vector<std::vector<std::int64_t>> rows{
        {},
        {1, 3, 2, 4, 2, 3, 1},
        {1, 5, 5, 11, 7, 9, 3, 4},
        {2, 8, 12, 19, 17, 23, 14, 14, 5, 6},
        {1, 10, 15, 33, 29, 31, 22, 27, 15, 17, 5, 6},
        {2, 16, 28, 52, 61, 61, 46, 36, 25, 28, 17, 18, 6, 7},
        {3, 17, 39, 84, 92, 111, 87, 76, 49, 40, 26, 34, 20, 21, 7, 8},
    };
    return rows;
}

inline const std::vector<std::vector<std::int64_t>>& half_integral_rows() {
    static const std::vector<std::vector<std::int64_t>> rows{
        {0, 1},
        {6, 6, 4, 7, 3, 2, 1, 1},
        {8, 35, 59, 39, 27, 27, 11, 7, 5, 2},
        {29, 103, 138, 124, 122, 72, 44, 39, 15, 13, 8, 4},
        {29, 224, 400, 366, 270, 164, 148, 86, 48, 42, 14, 10, 7, 3},
        {44, 420, 900, 1035, 784, 482, 271, 160, 159, 90, 55, 49, 16, 12, 8, 4},
        {80, 718, 1868, 2148, 1664, 1111, 663, 367, 217, 150, 174, 103, 63, 56, 18, 13, 9, 4},
    };
    return rows;
}

inline constexpr std::int64_t kMaxI = 6;
inline constexpr std::int64_t kHalfIntegralTotal = 16688;

/// Lattice polygons with (i, b), 1 <= i <= 6, b >= 3; zero beyond the end of
/// a row.
inline std::optional<std::int64_t> lattice_count(std::int64_t i, std::int64_t b) {
    if (i < 1 || i > kMaxI || b < 3) return std::nullopt;
    const auto& row = lattice_rows()[i];
    if (b - 3 >= static_cast<std::int64_t>(row.size())) return 0;
    return row[b - 3];
}

/// Half-integral pseudo-integral polygons with (i, b), 0 <= i <= 6, b >= 2;
/// zero beyond the end of a row.
inline std::optional<std::int64_t> half_integral_count(std::int64_t i, std::int64_t b) {
    if (i < 0 || i > kMaxI || b < 2) return std::nullopt;
    const auto& row = half_integral_rows()[i];
    if (b - 2 >= static_cast<std::int64_t>(row.size())) return 0;
    return row[b - 2];
}

/// Cells small enough for routine runs: the doubled polygon has at most 24
/// lattice points.
inline bool desk_scale(std::int64_t i, std::int64_t b) { return 4 * i + 3 * b - 3 <= 24; }

}  // namespace qpc::table
