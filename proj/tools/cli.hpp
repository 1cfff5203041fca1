#ifndef ZEL_TOOLS_CLI_HPP
#define ZEL_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace zel::cli {

/// Runs one zelc invocation. `args` excludes the program name. Results go to
/// `out`; failures are reported on `err` as a JSON object
/// {"error": <code>, "message": <text>}.
///
/// Exit codes: 0 success, 1 library failure (including a failed `check`),
/// 2 bad flags.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zel::cli

#endif  // ZEL_TOOLS_CLI_HPP
