#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rdiag {

enum class Symbol : unsigned char { One, Star };

constexpr Symbol flip(Symbol s) noexcept {
  return s == Symbol::One ? Symbol::Star : Symbol::One;
}

struct Run {
  Symbol symbol;
  std::size_t length;

  friend bool operator==(const Run&, const Run&) = default;
  friend auto operator<=>(const Run&, const Run&) = default;
};

/// A word in {1, *} kept in run-length form. Adjacent runs always carry
/// distinct symbols and every run is non-empty.
class StarString {
 public:
  StarString() = default;

  /// Merges adjacent equal runs and drops empty ones.
  static StarString from_runs(std::vector<Run> runs);
  static StarString from_symbols(const std::vector<Symbol>& symbols);

  /// (1^n1, *^m1, ..., 1^nr, *^mr).
  static StarString alternating(const std::vector<std::size_t>& ones,
                                const std::vector<std::size_t>& stars);

  const std::vector<Run>& runs() const noexcept { return runs_; }
  std::vector<Symbol> symbols() const;

  std::size_t length() const noexcept;
  std::size_t num_ones() const noexcept;
  std::size_t num_stars() const noexcept;
  bool empty() const noexcept { return runs_.empty(); }

  /// Concatenation with re-canonicalization at the seam.
  StarString operator+(const StarString& other) const;
  /// The string repeated `times` times.
  StarString repeat(std::size_t times) const;
  /// Exchanges the roles of 1 and *.
  StarString swapped() const;

  friend bool operator==(const StarString&, const StarString&) = default;
  friend auto operator<=>(const StarString&, const StarString&) = default;

 private:
  std::vector<Run> runs_;
};

/// Heights h_0 = 0, ..., h_L of the +-1 path: up for 1, down for *.
struct LatticePath {
  std::vector<long> heights;

  long final_height() const { return heights.back(); }
  long min_height() const;
  long max_height() const;
};

/// Grammar: tokens `1` or `*`, each optionally followed by `^k` (k >= 1),
/// separated by whitespace or written contiguously.
StarString parse_string(std::string_view text);

/// `1^a *^b ...` with single spaces; runs of length one carry no exponent.
std::string format_string(const StarString& s);

bool is_balanced(const StarString& s);

/// Maximal blocks read cyclically: a leading and trailing run of the same
/// symbol form one block.
std::vector<Run> cyclic_blocks(const StarString& s);

/// Number of cyclic maximal 1-blocks (or *-blocks when there are no 1s).
std::size_t num_runs(const StarString& s);

/// Left rotation by k positions (k may exceed the length or be negative).
StarString rotate(const StarString& s, long k);

/// Smallest cyclic block length. Throws DomainError on the empty string.
std::size_t min_block_size(const StarString& s);

/// Rotation (with a 1/* swap when the minimum sits on a *-block) that starts
/// with a 1-block of minimal size. Among such rotations the first whose
/// lattice path stays non-negative is preferred. Requires a balanced string.
StarString rotate_min_first(const StarString& s);

LatticePath lattice_path(const StarString& s);

/// max(heights) - min(heights) of the lattice path.
long path_height(const StarString& s);

/// Balanced strings (1^n1, *^m1, ..., 1^nr, *^mr) with sum n_j = sum m_j = n,
/// all parts >= 1 and, if given, smallest part equal to min_block. Sorted
/// lexicographically by (n1, m1, n2, m2, ...).
std::vector<StarString> enumerate_strings(std::size_t n, std::size_t r,
                                          std::optional<std::size_t> min_block = {});

/// Every balanced string of the given length, in lexicographic order with 1 < *.
std::vector<StarString> enumerate_balanced(std::size_t length);

/// Ordered compositions of n into k non-negative parts (k = 0 yields {{}} iff n = 0).
std::vector<std::vector<std::size_t>> weak_compositions(std::size_t n, std::size_t k);

}  // namespace rdiag
