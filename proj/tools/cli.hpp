#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace blockpd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitMismatch = 3;

// Runs the tool on `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace blockpd::cli
