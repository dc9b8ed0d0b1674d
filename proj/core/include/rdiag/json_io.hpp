#pragma once

// Internal: pulls in nlohmann/json. Only library sources and tools include this.

#include <string>

#include "json.hpp"

namespace rdiag {

using Json = nlohmann::ordered_json;

/// Single-line dump with ", " and ": " separators and shortest round-trip floats.
/// Object members keep insertion order so output is byte-stable.
std::string dump(const Json& value);

}  // namespace rdiag
