#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace numbergate::cli {

// Runs one CLI invocation; the machine-readable report goes to `out`.
// Exit codes: 0 ok, 1 violated, 2 budget exceeded, 3 parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace numbergate::cli
