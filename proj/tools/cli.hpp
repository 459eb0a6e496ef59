#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "logmmp/verify.hpp"

namespace logmmp::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Runs one command line (args excludes the program name). Writes reports to
/// out and diagnostics to err. verify_options feeds the verify subcommand;
/// --deep on the command line is merged into it.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const VerifyOptions& verify_options = {});

}  // namespace logmmp::cli
