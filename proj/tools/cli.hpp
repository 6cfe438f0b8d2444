#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncreal::cli {

/// kRejected: `verify` was given a certificate that does not check out.
enum ExitCode { kDecided = 0, kUsage = 1, kUndecided = 2, kRejected = 3 };

/// Runs one subcommand; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncreal::cli
