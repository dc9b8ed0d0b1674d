#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rdiag/strings.hpp"

namespace rdiag {

/// One letter a_j (adjoint = false) or a_j^* (adjoint = true); j >= 1.
struct Letter {
  std::size_t generator;
  bool adjoint;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A word in generators a_j and their adjoints.
struct GeneratorWord {
  std::vector<Letter> letters;

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }

  /// The 1/* exponent pattern of the word.
  StarString pattern() const;
  std::size_t max_generator() const noexcept;

  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;
  friend auto operator<=>(const GeneratorWord&, const GeneratorWord&) = default;
};

/// Parses `a1* a1 a2^3 a1*`: letters `a<j>` with optional `*` and optional
/// `^k` repetition. `1` or the empty text is the empty word.
GeneratorWord parse_word(std::string_view text);

/// Space-separated letters with repeats expanded; the empty word is `1`.
std::string format_word(const GeneratorWord& w);

/// a_j^n.
GeneratorWord power(std::size_t generator, std::size_t n, bool adjoint = false);

GeneratorWord operator*(const GeneratorWord& a, const GeneratorWord& b);

/// All words of exactly `length` letters over generators 1..generators.
std::vector<GeneratorWord> enumerate_words(std::size_t length, std::size_t generators);

}  // namespace rdiag
