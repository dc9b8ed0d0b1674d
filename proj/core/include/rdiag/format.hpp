#pragma once

#include <string>

namespace rdiag {

/// Formats a double as the shortest decimal that round-trips.
std::string format_double(double value);

}  // namespace rdiag
