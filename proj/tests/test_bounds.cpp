#include <gtest/gtest.h>

#include "rdiag/bounds.hpp"
#include "rdiag/errors.hpp"
#include "rdiag/noncrossing.hpp"

using namespace rdiag;

namespace {

StarString S(const char* text) { return parse_string(text); }

}  // namespace

TEST(FussCatalan, Values) {
  for (unsigned long n = 0; n <= 6; ++n) EXPECT_EQ(fuss_catalan(n, 1), 1);
  for (unsigned long r = 0; r <= 8; ++r) EXPECT_EQ(fuss_catalan(1, r), catalan(r));
  EXPECT_EQ(fuss_catalan(1, 3), 5);
  EXPECT_EQ(fuss_catalan(2, 2), 3);
}

TEST(FussCatalan, CountsRegularStrings) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t r = 1; n * r <= 8; ++r) {
      const auto s = StarString::alternating({n}, {n}).repeat(r);
      EXPECT_EQ(count_nc2(s), fuss_catalan(n, r)) << n << " " << r;
    }
  }
}

TEST(Bounds, Examples) {
  const auto fig = S("1^3 *^2 1 *^2");
  EXPECT_EQ(nc2_lower(fig), 2);
  EXPECT_EQ(count_nc2(fig), 2);
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(nc2_lower(StarString::alternating({n}, {n})), 1);
  const auto reg = S("1^2 *^2 1^2 *^2");
  EXPECT_EQ(path_height(rotate_min_first(reg)), 2);
  EXPECT_EQ(nc2_upper_height(reg), 3);
}

TEST(Bounds, UpperLengthExact) {
  // r = 2, n = 4: (2^1 / 2!) (1 + 4)^1 = 5
  EXPECT_EQ(nc2_upper_length_exact(S("1^2 *^2 1^2 *^2")), 5);
  // r = 3, n = 3: (9 / 6) * 4^2 = 24
  EXPECT_EQ(nc2_upper_length_exact(S("1 * 1 * 1 *")), 24);
  EXPECT_EQ(nc2_upper_length(S("1 * 1 * 1 *")), 24);
  // r = 3, n = 4: (3/2) * 25 = 75/2 -> ceiling 38
  EXPECT_EQ(nc2_upper_length_exact(S("1^2 * 1 * 1 *^2")), Rational(75, 2));
  EXPECT_EQ(nc2_upper_length(S("1^2 * 1 * 1 *^2")), 38);
}

TEST(Bounds, Unbalanced) {
  EXPECT_THROW(nc2_lower(S("1 1 *")), DomainError);
  EXPECT_THROW(nc2_upper_height(S("1 1 *")), DomainError);
  EXPECT_THROW(nc2_upper_length(S("1 1 *")), DomainError);
}

TEST(TwoRuns, Examples) {
  EXPECT_EQ(two_run_counts(S("1^3 *^2 1 *^2")), std::make_pair(BigInt(2), BigInt(3)));
  EXPECT_EQ(two_run_counts(S("1^2 *^2 1^2 *^2")), std::make_pair(BigInt(3), BigInt(5)));
  EXPECT_EQ(two_run_counts(S("1 * 1 *")), std::make_pair(BigInt(2), BigInt(3)));
  EXPECT_THROW(two_run_counts(S("1 *")), DomainError);
  EXPECT_THROW(two_run_counts(S("1 * 1 * 1 *")), DomainError);
}

TEST(TwoRuns, AgreeWithEnumerationUpToSixteen) {
  for (std::size_t n = 2; n <= 8; ++n) {
    for (const auto& s : enumerate_strings(n, 2)) {
      const auto [nc2, nc] = two_run_counts(s);
      ASSERT_EQ(nc2, count_nc2(s)) << format_string(s);
      ASSERT_EQ(nc, count_nc(s)) << format_string(s);
      ASSERT_EQ(nc2, BigInt(enumerate_nc2(s).size()));
      ASSERT_EQ(nc, BigInt(enumerate_nc_alternating(s).size()));
    }
  }
}

TEST(Verify, AllPassUpToFourteen) {
  const auto reports = verify_bounds(14);
  std::size_t expected = 0;
  for (std::size_t len = 2; len <= 14; len += 2) expected += binomial(len, len / 2).get_ui();
  EXPECT_EQ(reports.size(), expected);
  for (const auto& rep : reports) {
    EXPECT_TRUE(rep.pass()) << format_string(rep.string);
    EXPECT_LE(rep.h, static_cast<long>(rep.n));
  }
  EXPECT_TRUE(verify_bounds(8).front().pass());
  EXPECT_THROW(verify_bounds(18), ResourceError);
}

TEST(Verify, DeterministicOrder) {
  const auto a = verify_bounds(10);
  const auto b = verify_bounds(10);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(a[k].string, b[k].string);
}
