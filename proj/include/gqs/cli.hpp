#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gqs::cli {

// Exit codes of the command line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParseError = 1;
inline constexpr int kExitInvalid = 2;

/// Runs one invocation. args[0] is the program name. Input documents are read
/// from `in` unless a path is given; reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace gqs::cli
