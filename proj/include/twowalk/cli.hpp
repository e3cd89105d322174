#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twowalk {

/// Command-line entry point, separated from main() so tests can drive it.
/// Exit codes: 0 success, 1 malformed input or usage error, 2 when `verify`
/// finds a counterexample or an equivalence failure.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace twowalk
