#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ptpoly {

/// Runs `ptpoly <command> [options]` with args excluding the program name.
/// Returns 0 when every requested check passes, 1 when a check fails and 2
/// for usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ptpoly
