#pragma once

#include <string>
#include <vector>

namespace vknot::cli {

// exit codes
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 2;
inline constexpr int kInputError = 3;  // parse / validation failures
inline constexpr int kBoundError = 4;  // enumeration limits exceeded

struct CommandResult {
    int exit_code = kOk;
    std::string output; // complete stdout payload, deterministic
};

// Dispatches one invocation: validate | invariants | realizations | simplify |
// represent | twist | skein-check, plus --json and per-command flags.
// argv excludes the program name.
CommandResult run(const std::vector<std::string>& argv);

std::string usage();

} // namespace vknot::cli
