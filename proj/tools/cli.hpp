#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccsubmod::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_runtime_error = 1;
inline constexpr int exit_config_error = 2;
inline constexpr int exit_partial_failure = 3;

/// args excludes the program name. Payload goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ccsubmod::cli
