#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ringcode {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolation = 2;

/// Runs one `ringcode` invocation; args exclude the program name.
///
/// Returns 0 on a clean run, 2 when a bound violation or cross-check
/// failure was found, 1 on usage or parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ringcode
