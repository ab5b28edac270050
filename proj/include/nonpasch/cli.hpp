#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nonpasch::cli {

/// Exit codes of run_cli.
inline constexpr int kOk = 0;
inline constexpr int kExpectationMismatch = 1;
inline constexpr int kUsage = 2;

/// Runs the command line `args` (without the program name). Reports go to
/// `out`, diagnostics to `err`.
///
///   check           --model M --axioms A,B,..  [--strategy S] [--seed N] [--samples N]
///   suite           --model M                  [same options]
///   counterexample  --model M --target pasch|t2|t3|t4
///   angles          --lines L1 L2 L3
///   table           [--model pentaline]
///
/// check and suite also take --json DEST ("-" for stdout), --expect FILE
/// and --timing.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nonpasch::cli
