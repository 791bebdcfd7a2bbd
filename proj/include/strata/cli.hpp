#pragma once

#include <iosfwd>

namespace strata::cli {

/// Exit statuses of the command-line tool.
enum Status : int {
    kOk = 0,
    kInputError = 2,
    kDegenerateInput = 3,
    kInvariantViolation = 4,
};

/// Runs the `strata` command line. Files named "-" are read from `in`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace strata::cli
