#include "ptpoly/io.hpp"

#include "ptpoly/errors.hpp"

#include <fstream>
#include <sstream>

namespace ptpoly {

std::vector<Point> parse_points(std::string_view text) {
    std::vector<Point> out;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::string xs, ys, extra;
        if (!(fields >> xs >> ys) || (fields >> extra))
            throw Error(ErrorKind::parse_error, "line " + std::to_string(lineno) + ": expected two numbers");
        try {
            out.push_back({parse_rational(xs), parse_rational(ys)});
        } catch (const Error& e) {
            throw Error(ErrorKind::parse_error, "line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::parse_error, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Point> read_points(const std::filesystem::path& path) { return parse_points(read_file(path)); }

}  // namespace ptpoly
