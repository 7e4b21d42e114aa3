#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace littlewood::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kDomain = 3,
    kCapacity = 4,
    kAccuracy = 5,  // accuracy or construction failures; certificate on stderr
};

/// Parses and runs one invocation. args excludes argv[0]. Primary output
/// goes to out (or the --out file), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace littlewood::cli
