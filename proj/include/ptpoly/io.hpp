#pragma once

#include "ptpoly/geometry.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace ptpoly {

/// One point per line, two rational literals separated by whitespace; lines
/// starting with '#' and blank lines are skipped. Throws Error(parse_error).
std::vector<Point> parse_points(std::string_view text);
std::vector<Point> read_points(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

}  // namespace ptpoly
