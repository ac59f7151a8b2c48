#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rbop::cli {

/// Runs one CLI invocation (argv without the program name). Exit codes:
/// 0 = property holds / computation succeeded, 1 = checked property fails,
/// 2 = malformed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rbop::cli
