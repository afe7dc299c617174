#ifndef GAUSS_TOOLS_CLI_H_
#define GAUSS_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace gauss::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

// Environment variable holding the default enumeration budget (decimal).
inline constexpr const char* kBudgetEnvVar = "GAUSS_BUDGET";

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gauss::cli

#endif  // GAUSS_TOOLS_CLI_H_
