#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rdiag/cumulants.hpp"
#include "rdiag/rational.hpp"

namespace rdiag {

/// sum_{n<=N} e^{-2nt} ||a^n||_2^2, i.e. ||psi_t||_2^2 truncated at N.
double psi_norm2_sq(double t, std::size_t N, const CumulantSpec& spec);

/// sum_{0<=i,j<=n} min{i, j, n-i, n-j}, by direct iteration.
BigInt min_sum_direct(std::size_t n);
/// Same sum as sum_{k=1}^{floor(n/2)} (n+1-2k)^2, counting pairs with min >= k.
BigInt min_sum(std::size_t n);

/// sum_{n<=N} e^{-4nt} ((n+1)^2 + v * min_sum(n)) = ||psi_{2t}||_4^4 for a
/// normalized R-diagonal element with v = ||a||_4^4 - 1.
double psi_4norm4_circular(double t, std::size_t N, double v);

inline constexpr std::size_t kMaxBruteforceN = 8;
inline constexpr std::size_t kMaxBruteforceR = 3;

/// sum_{n<=N} q^{2n} sum over weak compositions n_1+..+n_r = m_1+..+m_r = n of
/// phi(a^{n_1} a^{*m_1} ... a^{n_r} a^{*m_r}), exactly. Requires N <= 8, r <= 3.
Rational psi_pnorm_bruteforce(const Rational& q, std::size_t N, std::size_t r,
                              const CumulantSpec& spec);

/// sum_{n=0}^{N} n^q e^{-nt} (with 0^0 = 1).
double sum_exp(unsigned q_power, double t, std::size_t N);

struct FitReport {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // root mean square of log residuals
  std::vector<double> xs;
  std::vector<double> ys;
};

/// Least squares line through (log x, log y). Needs two or more points with
/// distinct x and positive values.
FitReport fit_loglog(const std::vector<double>& xs, const std::vector<double>& ys);

/// `points` log-spaced values from t_min to t_max inclusive.
std::vector<double> log_grid(double t_min, double t_max, std::size_t points);

/// N(t) = ceil(c / t).
std::size_t truncation(double t, double c);

/// Fit of log sum_exp(q, t, N(t)) against log t.
FitReport sum_exp_slope(unsigned q_power, const std::vector<double>& grid, double c = 40.0);

enum class ScanModel { Circular, Haar, Custom };

struct ScanConfig {
  std::vector<double> t_grid;
  double c = 40.0;
  unsigned p = 4;  // 2 or 4
  ScanModel model = ScanModel::Circular;
  CumulantSpec spec;  // used for ScanModel::Custom
};

struct ScanRow {
  double t = 0.0;
  std::size_t N = 0;
  double norm2_sq = 0.0;     // ||psi_t||_2^2
  double norm2_sq_2t = 0.0;  // ||psi_2t||_2^2
  double norm4_4 = 0.0;      // ||psi_2t||_4^4
  double ratio_p = 0.0;      // ||psi_2t||_p / ||psi_t||_2
  double ratio_inf = 0.0;    // sqrt(norm4_4 / norm2_sq_2t) / ||psi_t||_2
};

struct SlopeCheck {
  std::string name;
  double target = 0.0;
  double tolerance = 0.0;
  FitReport fit;
  bool pass() const;
};

struct ScanResult {
  double v = 0.0;
  std::vector<ScanRow> rows;
  std::vector<SlopeCheck> checks;  // ratio_p, ratio_inf, norm4_4, norm2_sq_2t
  bool pass() const;
};

/// Evaluates the grid in parallel and fits every column against log t.
/// Targets follow the v > 0 (circular) or v = 0 (Haar) regime. Throws
/// DomainError on an empty grid, p outside {2, 4} or v < 0.
ScanResult ultracontractive_scan(const ScanConfig& cfg);

}  // namespace rdiag
