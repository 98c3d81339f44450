#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace logparadox::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 2;
inline constexpr int kExitUsage = 64;

/// Environment variable consulted when --seed is absent.
inline constexpr const char* kSeedEnvVar = "LOGPARADOX_SEED";

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Trailing moving average; the first window-1 entries average the values
/// seen so far.
[[nodiscard]] std::vector<double> moving_average(const std::vector<double>& v, std::size_t window);

} // namespace logparadox::cli
