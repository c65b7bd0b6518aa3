#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ptpoly {

enum class ErrorKind {
    degenerate_input,
    parse_error,
    missing_hull,
    crossing_input,
    boundary_element,
    not_fmpt,
    too_large,
    not_a_dependence,
    collinear4,
    not_collinear,
    wrong_configuration,
    singular_system,
    infeasible_vertex,
    skeleton_mismatch,
    no_boundary_collinearity,
    bad_subset,
    not_rigid,
};

std::string_view to_string(ErrorKind kind);

/// Every recoverable failure in the library is reported with one of these.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace ptpoly
