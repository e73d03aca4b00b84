#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lpgame {

/// Runs one subcommand (args exclude the program name). The report goes to
/// out, diagnostics to err. Returns 0 when a verdict was produced, 1 on
/// input errors, 2 when a cap was exceeded.
int run_command(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace lpgame
