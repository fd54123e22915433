#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qdissect {

/// Command-line front end. Exit codes: 0 all gated checks pass,
/// 1 a mathematical check failed, 2 usage or configuration error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

} // namespace qdissect
