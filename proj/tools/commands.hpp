#pragma once

#include <iosfwd>

namespace nfalen::cli {

/// Exit statuses shared by every subcommand.
enum Exit : int {
    positive = 0,  ///< ACCEPT, TRIANGLE, all validation flags hold, ...
    negative = 1,  ///< REJECT, TRIANGLE-FREE, failed validation, unsupported automaton
    input_error = 2,
};

/// Entry point of the `nfalen` tool. Results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nfalen::cli
