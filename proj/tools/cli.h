#ifndef XLING_TOOLS_CLI_H_
#define XLING_TOOLS_CLI_H_

#include <iosfwd>

namespace xling::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 2;
inline constexpr int kExitValidation = 3;

// Runs the `xling` command line. Normal output goes to `out`, diagnostics
// to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace xling::cli

#endif  // XLING_TOOLS_CLI_H_
