#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgforge::cli {

/// Exit codes: 0 success, 1 a verification counterexample (or an internal
/// consistency failure), 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Genus ceiling from SGFORGE_MAX_GENUS, default 18.
int max_genus();

}  // namespace sgforge::cli
