#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rdiag::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitResource = 3;

/// Runs one command. args excludes the program name. Diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rdiag::cli
