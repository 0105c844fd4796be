#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace landenkit::cli {

enum ExitCode : int {
    kOk = 0,
    kViolation = 1,       // a Violated record, a failed identity, or a counterexample
    kInvalidArgs = 2,     // bad arguments or a parameter error
    kNumericalFailure = 3 // domain error or a series that did not converge
};

/// Runs one subcommand: eval, identity, classify, seq, sweep, search.
/// `args` excludes the program name.  Reports go to `out` (or --output),
/// one-line diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace landenkit::cli
