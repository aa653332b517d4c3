#pragma once

#include <string>
#include <vector>

namespace bifactor::cli {

// Outcome of one CLI invocation. exit_code 0 = ok, 1 = precondition failed
// (output carries {"error": <name>}), 2 = malformed file or flags. output is
// the structured payload for stdout; diagnostics is human-readable text for
// stderr. Pure: identical args (and input files) produce identical bytes.
struct CommandResult {
    int exit_code = 0;
    std::string output;
    std::string diagnostics;
};

// Runs one subcommand; args exclude the program name.
CommandResult run(const std::vector<std::string>& args);

} // namespace bifactor::cli
