#pragma once

#include <string>
#include <vector>

namespace amdkit::cli {

/// Exit codes: 0 = pass/found, 1 = fail/not-found, 2 = usage or input error
/// (budget-exhausted searches also exit 2 so scripts never mistake an
/// inconclusive run for a nonexistence certificate).
struct RunResult {
    int exit_code = 0;
    std::string output;
};

/// Executes one command (verify, construct, diff, eval, classify, to-family,
/// from-family, search, relate, reproduce-paper) and returns its report
/// envelope. Output is byte-identical for identical inputs.
RunResult run(const std::vector<std::string>& args);

} // namespace amdkit::cli
