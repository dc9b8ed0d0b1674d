#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rdiag {

/// Malformed textual input (strings, words, rationals, JSON documents).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// An argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A size guard tripped before an enumeration could exhaust memory or time.
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace rdiag
