#ifndef FPCURVES_CLI_COMMANDS_HPP
#define FPCURVES_CLI_COMMANDS_HPP

#include <iosfwd>
#include <stop_token>
#include <string>
#include <vector>

namespace fpc::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitInvalid = 1,  ///< bad arguments or unreadable input
    kExitPartial = 2,  ///< a scan stopped before covering its whole space
};

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// the --out file when given and to `out` otherwise; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::stop_token stop = {});

}  // namespace fpc::cli

#endif
