#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "qpc/text.hpp"

#ifndef QPC_TEST_DATA
#error "QPC_TEST_DATA must point at tests/data"
#endif

inline std::string data_path(const std::string& name) { return std::string(QPC_TEST_DATA) + "/" + name; }

inline std::vector<qpc::ConvexPolygon> load_polygons(const std::string& name) {
    std::ifstream in(data_path(name));
    std::vector<qpc::ConvexPolygon> out;
    for (std::string line; std::getline(in, line);)
        if (!line.empty() && line[0] != '#') out.push_back(qpc::parse_polygon(line));
    return out;
}
