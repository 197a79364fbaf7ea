#pragma once

// Command-line front end: subcommands curve, dos, threshold and converge.
// Output is CSV (curves, densities of states) or JSON (reports), with
// numbers printed to 12 significant digits so that repeated runs are
// byte-identical.

#include <iosfwd>
#include <string>
#include <vector>

namespace openheat::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kNoConvergence = 3 };

/// Runs the tool on `args` (without the program name). Results go to `out`
/// unless --output is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// printf("%.12g") formatting used for every number the tool writes.
std::string format_number(double v);

}  // namespace openheat::cli
