#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace gdnp::cli {

enum ExitCode : int { ok = 0, math_error = 1, usage_error = 2 };

/// Runs one command line. `args` excludes the program name. Normal output goes
/// to `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gdnp::cli
