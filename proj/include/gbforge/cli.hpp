#ifndef GBFORGE_CLI_HPP
#define GBFORGE_CLI_HPP

namespace gbforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitVerification = 3;
inline constexpr int kExitBudget = 4;

/// Full command-line entry point (generate | verify | experiment | stats).
int run(int argc, const char* const* argv);

} // namespace gbforge::cli

#endif
