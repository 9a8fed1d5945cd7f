#pragma once

#include <iosfwd>

namespace covest::cli {

/// Runs one CLI invocation. CSV and matrix output without --out goes to
/// `out`, diagnostics to `err`. Returns the process exit code: 0 success,
/// 1 failed verification or runtime error, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace covest::cli
