#include "rdiag/bounds.hpp"

#include <algorithm>

#include "rdiag/errors.hpp"
#include "rdiag/noncrossing.hpp"
#include "rdiag/parallel.hpp"

namespace rdiag {

BigInt fuss_catalan(unsigned long n, unsigned long r) {
  BigInt out = binomial((n + 1) * r, r);
  out /= static_cast<unsigned long>(n * r + 1);
  return out;
}

namespace {

void require_balanced(const StarString& s, const char* who) {
  if (!is_balanced(s) || s.empty()) {
    throw DomainError(std::string(who) + ": needs a non-empty balanced string, got '" +
                      format_string(s) + "'");
  }
}

Rational length_factor(std::size_t r, unsigned long base) {
  Rational out(BigInt(1), factorial(r));
  out *= pow(Rational(static_cast<unsigned long>(r)), r - 1);
  out *= pow(Rational(base), r - 1);
  return out;
}

BigInt ceil(const Rational& q) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

}  // namespace

BigInt nc2_lower(const StarString& s) {
  require_balanced(s, "nc2_lower");
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 1 + min_block_size(s), num_runs(s) - 1);
  return out;
}

BigInt nc2_upper_height(const StarString& s) {
  require_balanced(s, "nc2_upper_height");
  return fuss_catalan(static_cast<unsigned long>(path_height(rotate_min_first(s))), num_runs(s));
}

Rational nc2_upper_length_exact(const StarString& s) {
  require_balanced(s, "nc2_upper_length");
  return length_factor(num_runs(s), 1 + s.num_ones());
}

BigInt nc2_upper_length(const StarString& s) { return ceil(nc2_upper_length_exact(s)); }

Rational nc2_upper_height_poly(const StarString& s) {
  require_balanced(s, "nc2_upper_height_poly");
  return length_factor(num_runs(s),
                       1 + static_cast<unsigned long>(path_height(rotate_min_first(s))));
}

std::pair<BigInt, BigInt> two_run_counts(const StarString& s) {
  if (!is_balanced(s) || num_runs(s) != 2) {
    throw DomainError("two_run_counts: needs a balanced string with two runs, got '" +
                      format_string(s) + "'");
  }
  const unsigned long m = min_block_size(s);
  return {BigInt(1 + m), BigInt(1 + 2 * m)};
}

BoundReport bound_report(const StarString& s) {
  BoundReport rep;
  rep.string = s;
  rep.n = s.num_ones();
  rep.r = num_runs(s);
  rep.i = min_block_size(s);
  rep.h = path_height(rotate_min_first(s));
  rep.count_nc2 = count_nc2(s);
  rep.count_nc = count_nc(s);
  rep.lower = nc2_lower(s);
  rep.upper_height = nc2_upper_height(s);
  rep.upper_height_poly = nc2_upper_height_poly(s);
  rep.upper_length = nc2_upper_length_exact(s);
  rep.lower_ok = rep.lower <= rep.count_nc2;
  rep.upper_height_ok = rep.count_nc2 <= rep.upper_height;
  rep.chain_ok = Rational(rep.upper_height) <= rep.upper_height_poly &&
                 rep.upper_height_poly <= rep.upper_length;
  rep.height_ok = rep.h >= 0 && static_cast<std::size_t>(rep.h) <= rep.n;
  if (rep.r == 2) {
    rep.two_run_exact = two_run_counts(s);
    rep.two_run_ok =
        rep.two_run_exact->first == rep.count_nc2 && rep.two_run_exact->second == rep.count_nc;
  }
  return rep;
}

std::vector<BoundReport> verify_bounds(std::size_t max_len) {
  if (max_len > kMaxVerifyLength) {
    throw ResourceError("verify_bounds: max_len " + std::to_string(max_len) + " exceeds " +
                        std::to_string(kMaxVerifyLength));
  }
  std::vector<StarString> strings;
  for (std::size_t len = 2; len <= max_len; len += 2) {
    auto batch = enumerate_balanced(len);
    strings.insert(strings.end(), batch.begin(), batch.end());
  }
  return parallel_map(strings.size(), [&](std::size_t k) { return bound_report(strings[k]); });
}

}  // namespace rdiag
