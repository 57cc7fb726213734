#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tusi {

/// Command-line front end. Exit codes: 0 for a completed analysis (an
/// impossible equation is a valid answer), 2 for parse or usage errors,
/// 3 for internal invariant or certification failures.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tusi
