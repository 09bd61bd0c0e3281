#pragma once

#include <string>
#include <vector>

namespace widthforge::cli {

// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget
// exceeded. The WIDTHFORGE_BUDGET environment variable overrides the solver
// size limits.
int run(const std::vector<std::string>& args);

}  // namespace widthforge::cli
