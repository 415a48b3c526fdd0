#pragma once

#include <ostream>

namespace sklylab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerdict = 2;

/// Parses argv and dispatches. Returns 0 when every verdict passes, 2 when
/// a verdict fails and 1 on usage or input errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sklylab::cli
