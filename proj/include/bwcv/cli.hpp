#pragma once

#include <string>
#include <vector>

namespace bwcv {

/// Entry point behind the `bwcv` binary; also callable in-process by tests.
/// `args` excludes the program name. Exit codes: 0 success, 2 invalid input
/// (instance/report/parameters), 3 enumeration size guard tripped, 1 other
/// failures.
int run_cli(const std::vector<std::string>& args);

}  // namespace bwcv
