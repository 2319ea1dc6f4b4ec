#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace wbshift::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kInconclusive = 2,
  kClassMismatch = 3,
  kToleranceExceeded = 4,
};

inline constexpr double kDefaultConjugacyTolerance = 1e-9;
inline constexpr double kDefaultAlgebraicTolerance = 1e-12;
inline constexpr std::uint64_t kDefaultSeed = 20081022;
inline constexpr std::size_t kDefaultHorizon = 1000000;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wbshift::cli
