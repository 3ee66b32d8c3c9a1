#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chern::cli {

/// Runs the command line given the arguments after the program name. Data
/// goes to `out`, diagnostics to `err`. Exit codes: 0 success, 1 malformed
/// flags or model spec, 2 verification/divisibility failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chern::cli
