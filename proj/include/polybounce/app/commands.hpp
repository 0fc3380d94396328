#ifndef POLYBOUNCE_APP_COMMANDS_HPP
#define POLYBOUNCE_APP_COMMANDS_HPP

#include "polybounce/app/config.hpp"
#include "polybounce/app/output.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace polybounce::app {

enum ExitCode : int { kExitOk = 0, kExitConfig = 2, kExitNumerical = 3, kExitPartial = 4 };

struct CommandResult {
    Table table;
    int exit_code = kExitOk;
};

CommandResult cmd_spectrum(const RunConfig& cfg);
// Lattice and continuum densities for one (s, n).
CommandResult cmd_profile(const RunConfig& cfg, double s, int n);
CommandResult cmd_bound(const RunConfig& cfg);
CommandResult cmd_lifetime(const RunConfig& cfg);
CommandResult cmd_rate(const RunConfig& cfg);

// Parses argv (without the program name), runs one subcommand and writes the
// rendered result to `out` or to the configured output path.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace polybounce::app

#endif
