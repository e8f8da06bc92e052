#pragma once

#include <iosfwd>
#include <vector>

#include "multisign/laws.hpp"

namespace multisign::cli {

// Exit code taxonomy, fixed for scriptability.
enum ExitCode : int {
    exit_ok = 0,
    exit_syntax = 2,        // malformed expression/literal or command line
    exit_semantic = 3,      // sign range, shape, zero inverse, ...
    exit_law_mismatch = 4,  // a law verdict disagrees with the expected table
    exit_budget = 5,        // a law sweep exceeded the case budget
};

/// Folds suite outcomes against the expected-verdict table into an exit
/// code: budget overruns dominate, then other per-law errors, then
/// verdict mismatches.
int laws_exit_code(const std::vector<LawOutcome>& outcomes, const Domain& dom);

/// Full command-line driver; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace multisign::cli
