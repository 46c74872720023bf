#pragma once

#include <iosfwd>

namespace assoc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBadFile = 3;

/// Subcommands: gen, sort, verify, bench, trace. Normal output goes to `out`;
/// diagnostics, statistics and timings go to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace assoc::cli
