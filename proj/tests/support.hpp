#pragma once

#include "ptpoly/geometry.hpp"
#include "ptpoly/io.hpp"

#include <random>
#include <string>

namespace testing {

inline ptpoly::PointSet load(const std::string& name) {
    return ptpoly::PointSet::classify(ptpoly::read_points(std::string(PTPOLY_DATA_DIR) + "/" + name + ".pts"));
}

inline ptpoly::PointSet points(std::initializer_list<std::pair<int, int>> xy) {
    std::vector<ptpoly::Point> pts;
    for (auto [x, y] : xy) pts.push_back({x, y});
    return ptpoly::PointSet::classify(std::move(pts));
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20240613);
    return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

}  // namespace testing
