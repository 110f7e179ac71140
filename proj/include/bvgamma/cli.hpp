#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bvgamma {

/// Runs the command line `args` (without the program name). Exit status:
/// 0 when every check passed, 1 when a mathematical check failed, 2 on a
/// configuration error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "a..b" ranges of positive deltas expand to the 1-3 sequence per decade,
/// descending; otherwise a comma separated list.
std::vector<double> parse_delta_list(const std::string& text);

/// "a..b" or a comma separated list of integers.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace bvgamma
