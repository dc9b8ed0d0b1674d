#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "rdiag/rational.hpp"
#include "rdiag/strings.hpp"

namespace rdiag {

/// (1/(nr+1)) * binomial((n+1)r, r).
BigInt fuss_catalan(unsigned long n, unsigned long r);

/// (1+i)^(r-1) with i the minimal cyclic block and r the cyclic run count.
BigInt nc2_lower(const StarString& s);
/// C_r^(h) with h the path height after rotate_min_first.
BigInt nc2_upper_height(const StarString& s);
/// (r^(r-1)/r!) (1+n)^(r-1), exact.
Rational nc2_upper_length_exact(const StarString& s);
/// Ceiling of nc2_upper_length_exact.
BigInt nc2_upper_length(const StarString& s);
/// (r^(r-1)/r!) (1+h)^(r-1), the intermediate link of the chain.
Rational nc2_upper_height_poly(const StarString& s);

/// (|NC_2|, |NC|) = (1 + m, 1 + 2m) for a two-run string, m the smallest block.
/// Throws DomainError unless the string is balanced with r = 2.
std::pair<BigInt, BigInt> two_run_counts(const StarString& s);

struct BoundReport {
  StarString string;
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t i = 0;
  long h = 0;
  BigInt count_nc2;
  BigInt count_nc;
  BigInt lower;
  BigInt upper_height;
  Rational upper_height_poly;
  Rational upper_length;
  std::optional<std::pair<BigInt, BigInt>> two_run_exact;
  bool lower_ok = false;
  bool upper_height_ok = false;
  bool chain_ok = false;
  bool height_ok = false;  // h <= n after rotation
  bool two_run_ok = true;

  bool pass() const noexcept {
    return lower_ok && upper_height_ok && chain_ok && height_ok && two_run_ok;
  }
};

inline constexpr std::size_t kMaxVerifyLength = 16;

BoundReport bound_report(const StarString& s);

/// Reports for every non-empty balanced string of length <= max_len, ordered by
/// length and then lexicographically. Throws ResourceError past 16.
std::vector<BoundReport> verify_bounds(std::size_t max_len);

}  // namespace rdiag
