#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rdiag/rational.hpp"
#include "rdiag/strings.hpp"

namespace rdiag {

/// A partition of {1..n}. Blocks are sorted internally and ordered by their
/// minimum element.
class SetPartition {
 public:
  using Block = std::vector<std::size_t>;

  SetPartition() = default;

  /// Validates disjointness and coverage, then canonicalizes.
  /// Throws DomainError on invalid input.
  SetPartition(std::size_t n, std::vector<Block> blocks);

  static SetPartition singletons(std::size_t n);
  static SetPartition one_block(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Block> blocks_;
};

/// `{1,4}{2,3}`; the empty partition formats as the empty string.
std::string format_partition(const SetPartition& p);

bool is_noncrossing(const SetPartition& p);

inline constexpr std::size_t kMaxNcSize = 12;
inline constexpr std::size_t kMaxNcStringLength = 24;

/// All of NC(n), ordered by canonical block encoding. Requires n <= 12.
std::vector<SetPartition> enumerate_nc(std::size_t n);

/// Refinement order: every block of s lies inside a block of p.
bool leq(const SetPartition& s, const SetPartition& p);

/// Moebius function of the NC(n) lattice, by recursion over intervals.
/// Keeps a memo keyed by the canonical encodings of the interval ends.
class MoebiusTable {
 public:
  explicit MoebiusTable(std::size_t n);

  /// Throws DomainError when s is not below p.
  long operator()(const SetPartition& s, const SetPartition& p);

  const std::vector<SetPartition>& lattice() const noexcept { return lattice_; }

 private:
  std::size_t n_;
  std::vector<SetPartition> lattice_;
  std::map<std::pair<std::string, std::string>, long> memo_;
};

long moebius(const SetPartition& s, const SetPartition& p);

/// NC(S): non-crossing partitions whose blocks have even size and alternate
/// between 1 and * along S. Requires length(S) <= 24.
std::vector<SetPartition> enumerate_nc_alternating(const StarString& s);

/// NC_2(S): the pairings in NC(S).
std::vector<SetPartition> enumerate_nc2(const StarString& s);

/// |NC_2(S)| by an interval recursion: the first letter pairs with an opposite
/// letter at the same path level, and inside and outside are counted
/// independently. Returns 0 for unbalanced S.
BigInt count_nc2(const StarString& s);

/// |NC(S)| by the interval recursion used for R-diagonal moments.
BigInt count_nc(const StarString& s);

/// Sum over non-crossing partitions of the positions whose blocks are even,
/// alternate in `symbols` and are constant in `labels`, of the product of
/// weight(label, |V|/2) over blocks. With all labels equal this is the sum over
/// NC(S). Runs in O(L^4) time by memoizing partial blocks.
template <typename T>
T alternating_partition_sum(std::span<const Symbol> symbols, std::span<const std::size_t> labels,
                            const std::function<T(std::size_t label, std::size_t half)>& weight);

}  // namespace rdiag

#include "rdiag/detail/alternating_sum.hpp"
