#pragma once

#include <iosfwd>

#include "trigspline/cli/config.hpp"

namespace trigspline::cli {

enum ExitCode : int { exit_ok = 0, exit_usage = 2, exit_numeric = 3 };

/// Dispatches one command. Output goes to config.out (atomically) or `out`;
/// diagnostics go to `err`.
[[nodiscard]] int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parse + run; usage errors print a message and return exit_usage.
[[nodiscard]] int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace trigspline::cli
