/**
 * @file cli.hpp
 * @brief Entry point of the omega-scramble command line, callable in-process.
 */
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace omega::tools {

inline constexpr int kExitPass = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name. Machine-readable output goes to `out`,
/// diagnostics and error JSON to `err`.
[[nodiscard]] int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace omega::tools
