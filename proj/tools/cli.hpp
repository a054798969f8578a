#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace divseq::cli {

inline constexpr const char* tool_name = "divseq";

/// Exit codes: 0 success (including a property that fails with a witness),
/// 1 usage error, 2 domain or internal error.
enum ExitCode { exit_ok = 0, exit_usage = 1, exit_domain = 2 };

/// Runs one command. `args` excludes the program name. Reports go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace divseq::cli
