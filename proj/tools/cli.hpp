#pragma once

#include <iosfwd>

namespace merid::cli {

inline constexpr const char* kVersion = "1.0.0";

/// Runs one merid command. Returns the process exit code:
/// 0 success, 2 usage error, 3 precondition failure, 4 numerical failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace merid::cli
