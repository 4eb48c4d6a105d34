#pragma once

#include <iosfwd>

namespace ssiw::cli {

/// Exit codes of the command-line tool.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kBadInput = 2;

/// Runs the tool on argv, writing results to `out` and diagnostics to `err`.
/// `in` feeds inputs given as "-".
int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace ssiw::cli
