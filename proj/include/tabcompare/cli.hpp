#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tabcompare {

/// Exit codes: 0 success, 1 parse/configuration error, 2 internal error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInternalError = 2;

/// Entry point of the `tabcompare` tool. `args` excludes the program name.
///   analyze <file>... [--track i,j,k] [--gap-cost F] [--scale-length MM] [--wc F] [--wo F] [--out PATH]
///   tracks <file>
///   serve [--port N] [--host H] [--data-dir PATH] [--ui-dir PATH]
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tabcompare
