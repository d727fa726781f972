#ifndef IHARA_CLI_HPP
#define IHARA_CLI_HPP

#include "ihara/error.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace ihara::cli {

enum ExitCode : int {
    Ok = 0,
    CheckFailed = 1,
    BadInput = 2,
    Precondition = 3,
};

/// Exit status for an error raised while serving a command.
int exit_code_for(ErrorCode code) noexcept;

/// Runs one command line (without the program name). Graph arguments are
/// file paths or "-" for `in`; reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace ihara::cli

#endif // IHARA_CLI_HPP
