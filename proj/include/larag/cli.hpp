#pragma once

namespace larag::cli {

// Entry point behind main(): parses argv, executes one subcommand, and
// returns the process exit status. Failures print a one-line cause to
// stderr and return nonzero.
int run(int argc, const char* const* argv);

}  // namespace larag::cli
