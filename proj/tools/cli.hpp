#pragma once

#include <iosfwd>

namespace kronlab::cli {

/// Runs one command line. Output goes to `out`, diagnostics to `err`.
/// Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace kronlab::cli
