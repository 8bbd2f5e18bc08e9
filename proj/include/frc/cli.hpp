#pragma once

#include <iosfwd>

namespace frc::cli {

/// Process exit statuses shared by every subcommand.
enum ExitStatus : int {
    kOk = 0,
    kUsage = 1,       // bad arguments or unparseable input file
    kRejected = 2,    // infeasible parameters or invalid code
    kIoError = 3,
};

/// Entry point for `frc {feasible|construct|verify|orbits|sweep}`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace frc::cli
