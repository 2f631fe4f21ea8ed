#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace revolve::cli {

/// Exit codes of `run`.
enum ExitCode { Ok = 0, ValidationFailure = 2, NumericalFailure = 3 };

/// Runs one command line (without the program name). Artifacts go to the
/// directory given by --out, which also holds the state shared between
/// commands: `surface.json` written by `prescribe` and `catalog build`,
/// `profile.csv` written by `profile`. Nothing is written when the command
/// fails.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace revolve::cli
