#ifndef D4FS_CLI_HPP
#define D4FS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace d4fs::cli {

inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;

/// Runs one subcommand. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace d4fs::cli

#endif  // D4FS_CLI_HPP
