#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lhamil {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,      // usage, parameter-window or I/O error
    kExitViolation = 2,  // a verify sweep found a counterexample
};

/// Runs one command line (without the program name). Graph input is read
/// from `in` unless a path is given; results go to `out`, diagnostics to
/// `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lhamil
