#ifndef MFTK_TOOLS_CLI_H_
#define MFTK_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace mftk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// Runs one invocation; `args` excludes the program name. Human-readable
// diagnostics go to `err`; results go to `out` unless an output path is given.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mftk::cli

#endif  // MFTK_TOOLS_CLI_H_
