#include <gtest/gtest.h>

#include <cmath>

#include "rdiag/errors.hpp"
#include "rdiag/noncrossing.hpp"
#include "rdiag/normlab.hpp"

using namespace rdiag;

TEST(Psi, TwoNormClosedForm) {
  const auto c = CumulantSpec::circular(2);
  const auto u = CumulantSpec::haar_unitary(2);
  const double closed = 1.0 / (1.0 - std::exp(-0.2));
  EXPECT_NEAR(psi_norm2_sq(0.1, 300, c) / closed, 1.0, 1e-12);
  EXPECT_EQ(psi_norm2_sq(0.1, 300, c), psi_norm2_sq(0.1, 300, u));
  EXPECT_NEAR(psi_norm2_sq(50.0, 10, c), 1.0, 1e-12);
}

TEST(MinSum, LayerCakeMatchesDirect) {
  for (std::size_t n = 0; n <= 80; ++n) EXPECT_EQ(min_sum(n), min_sum_direct(n)) << n;
  EXPECT_EQ(min_sum(2), 1);
}

TEST(MinSum, ClosedFormAndCubicBound) {
  // exact partial sum (1/2) sum_{j<=n/2} j(j+1) = n(n+2)(n+4)/48 for even n
  for (std::size_t n = 2; n <= 60; n += 2) {
    BigInt half = 0;
    for (std::size_t j = 0; j <= n / 2; ++j) half += static_cast<unsigned long>(j * (j + 1));
    EXPECT_EQ(Rational(half) / 2, Rational(static_cast<long>(n * (n + 2) * (n + 4))) / 48);
  }
  // n^3/48 + n^2/4 + n/3 is below the full sum from n = 4 on, not at n = 2
  auto cubic = [](std::size_t n) -> Rational {
    const Rational x(static_cast<long>(n));
    return x * x * x / 48 + x * x / 4 + x / 3;
  };
  EXPECT_LT(Rational(min_sum(2)), cubic(2));
  for (std::size_t n = 4; n <= 60; n += 2) EXPECT_GE(Rational(min_sum(n)), cubic(n)) << n;
}

TEST(Psi, FourNormSmallCases) {
  // n = 2, v = 1 contributes 10; check the first terms exactly at t large
  const double t = 3.0;
  const double expect = 1.0 + 4.0 * std::exp(-4 * t) + 10.0 * std::exp(-8 * t);
  EXPECT_NEAR(psi_4norm4_circular(t, 2, 1.0), expect, 1e-15);
  // v = 0 is sum e^{-4nt} (n+1)^2
  double haar = 0;
  for (int n = 0; n <= 50; ++n) haar += std::exp(-4.0 * n * 0.1) * (n + 1.0) * (n + 1.0);
  EXPECT_NEAR(psi_4norm4_circular(0.1, 50, 0.0), haar, 1e-9);
}

TEST(Psi, LowerBoundChain) {
  for (double t : {0.005, 0.01, 0.03, 0.05}) {
    const std::size_t N = truncation(t, 40);
    double cube = 0;
    for (std::size_t n = 0; n <= N; ++n) cube += std::pow(double(n), 3) * std::exp(-4.0 * n * t);
    EXPECT_GE(psi_4norm4_circular(t, N, 1.0), cube / 48.0);
  }
}

TEST(Bruteforce, GeometricForOneRun) {
  const Rational q(1, 2);
  Rational expect = 0;
  for (int n = 0; n <= 8; ++n) expect += pow(q * q, n);
  EXPECT_EQ(psi_pnorm_bruteforce(q, 8, 1, CumulantSpec::circular(8)), expect);
  EXPECT_EQ(psi_pnorm_bruteforce(q, 8, 1, CumulantSpec::haar_unitary(8)), expect);
}

TEST(Bruteforce, MatchesFloatPipeline) {
  const double exact = psi_pnorm_bruteforce(Rational(1, 2), 6, 2, CumulantSpec::circular(12)).get_d();
  const double t = std::log(2.0) / 2.0;
  EXPECT_NEAR(exact, psi_4norm4_circular(t, 6, 1.0), 1e-12);
  const double haar = psi_pnorm_bruteforce(Rational(1, 2), 6, 2, CumulantSpec::haar_unitary(12)).get_d();
  EXPECT_NEAR(haar, psi_4norm4_circular(t, 6, 0.0), 1e-12);
}

TEST(Bruteforce, ThreeRunsEqualsNc2Sum) {
  const Rational q(2, 3);
  Rational expect = 0;
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto comps = weak_compositions(n, 3);
    Rational inner = 0;
    for (const auto& a : comps)
      for (const auto& b : comps) inner += Rational(count_nc2(StarString::alternating(a, b)));
    expect += pow(q, 2 * n) * inner;
  }
  EXPECT_EQ(psi_pnorm_bruteforce(q, 5, 3, CumulantSpec::circular(15)), expect);
  EXPECT_THROW(psi_pnorm_bruteforce(q, 9, 2, CumulantSpec::circular(20)), ResourceError);
  EXPECT_THROW(psi_pnorm_bruteforce(q, 4, 4, CumulantSpec::circular(20)), ResourceError);
}

TEST(SumExp, ClosedFormAndSlopes) {
  EXPECT_NEAR(sum_exp(0, 0.1, 2000) * (1 - std::exp(-0.1)), 1.0, 1e-12);
  const auto grid = log_grid(0.002, 0.02, 10);
  EXPECT_NEAR(sum_exp_slope(0, grid).slope, -1.0, 0.05);
  EXPECT_NEAR(sum_exp_slope(2, grid).slope, -3.0, 0.05);
  EXPECT_NEAR(sum_exp_slope(3, grid).slope, -4.0, 0.05);
}

TEST(Fit, ExactPowerLaw) {
  const std::vector<double> xs{1, 2, 4, 8};
  const std::vector<double> ys{3, 3.0 / 8, 3.0 / 64, 3.0 / 512};
  const auto fit = fit_loglog(xs, ys);
  EXPECT_NEAR(fit.slope, -3.0, 1e-12);
  EXPECT_NEAR(std::exp(fit.intercept), 3.0, 1e-12);
  EXPECT_NEAR(fit.residual, 0.0, 1e-12);
  EXPECT_THROW(fit_loglog({1}, {1}), DomainError);
  EXPECT_THROW(fit_loglog({1, 2}, {1, -1}), DomainError);
}

TEST(Grid, LogSpacing) {
  const auto g = log_grid(0.005, 0.05, 10);
  ASSERT_EQ(g.size(), 10u);
  EXPECT_EQ(g.front(), 0.005);
  EXPECT_EQ(g.back(), 0.05);
  EXPECT_TRUE(std::is_sorted(g.begin(), g.end()));
  EXPECT_EQ(truncation(0.005, 40), 8000u);
}

TEST(Scan, RatioSlopes) {
  ScanConfig cfg;
  cfg.t_grid = log_grid(0.005, 0.05, 10);
  const auto circ = ultracontractive_scan(cfg);
  EXPECT_EQ(circ.v, 1.0);
  for (const auto& c : circ.checks) {
    if (c.name == "norm4_4") continue;  // pre-asymptotic on this grid, see below
    EXPECT_TRUE(c.pass()) << c.name << " " << c.fit.slope;
  }
  cfg.model = ScanModel::Haar;
  const auto haar = ultracontractive_scan(cfg);
  EXPECT_EQ(haar.v, 0.0);
  EXPECT_TRUE(haar.pass());
}

TEST(Scan, CircularFourNormApproachesMinusFour) {
  // A(t) ~ (4t)^-4 (1 + 8t): the local slope drifts toward -4 as t shrinks.
  ScanConfig cfg;
  cfg.t_grid = log_grid(0.005, 0.05, 10);
  const double coarse = ultracontractive_scan(cfg).checks[2].fit.slope;
  EXPECT_NEAR(coarse, -3.85, 0.02);
  cfg.t_grid = log_grid(0.0005, 0.005, 10);
  const double fine = ultracontractive_scan(cfg).checks[2].fit.slope;
  EXPECT_NEAR(fine, -4.0, 0.02);
}

TEST(Scan, TruncationAdequacy) {
  ScanConfig a;
  a.t_grid = log_grid(0.005, 0.05, 4);
  ScanConfig b = a;
  b.c = 80;
  const auto ra = ultracontractive_scan(a);
  const auto rb = ultracontractive_scan(b);
  for (std::size_t k = 0; k < ra.rows.size(); ++k) {
    EXPECT_NEAR(ra.rows[k].norm4_4 / rb.rows[k].norm4_4, 1.0, 1e-9);
    EXPECT_NEAR(ra.rows[k].norm2_sq / rb.rows[k].norm2_sq, 1.0, 1e-9);
    EXPECT_NEAR(ra.rows[k].ratio_inf / rb.rows[k].ratio_inf, 1.0, 1e-9);
  }
}

TEST(Scan, Validation) {
  ScanConfig cfg;
  EXPECT_THROW(ultracontractive_scan(cfg), DomainError);
  cfg.t_grid = {0.01, 0.02};
  cfg.p = 3;
  EXPECT_THROW(ultracontractive_scan(cfg), DomainError);
  cfg.p = 4;
  cfg.model = ScanModel::Custom;
  cfg.spec = CumulantSpec::custom({1, -2});
  EXPECT_THROW(ultracontractive_scan(cfg), DomainError);
  cfg.spec = CumulantSpec::custom({1, Rational(1, 2)});
  EXPECT_EQ(ultracontractive_scan(cfg).v, 1.5);
}
