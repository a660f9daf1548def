#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zkec::cli {

inline constexpr int kExitAccept = 0;
inline constexpr int kExitReject = 1;
inline constexpr int kExitTransport = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitDecode = 65;

/// Runs one command line (without the program name). Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zkec::cli
