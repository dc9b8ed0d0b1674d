#include "rdiag/normlab.hpp"

#include <algorithm>
#include <cmath>

#include "rdiag/errors.hpp"
#include "rdiag/parallel.hpp"

namespace rdiag {

double psi_norm2_sq(double t, std::size_t N, const CumulantSpec& spec) {
  if (spec.d.empty()) throw DomainError("psi_norm2_sq: empty cumulant spec");
  const double d1 = spec.d[0].get_d();
  const double ratio = std::exp(-2.0 * t) * d1;
  double acc = 0.0;
  double term = 1.0;
  for (std::size_t n = 0; n <= N; ++n) {
    acc += term;
    term *= ratio;
  }
  return acc;
}

BigInt min_sum_direct(std::size_t n) {
  BigInt acc = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      acc += static_cast<unsigned long>(std::min({i, j, n - i, n - j}));
    }
  }
  return acc;
}

BigInt min_sum(std::size_t n) {
  BigInt acc = 0;
  for (std::size_t k = 1; 2 * k <= n; ++k) {
    const unsigned long side = n + 1 - 2 * k;
    acc += BigInt(side) * side;
  }
  return acc;
}

double psi_4norm4_circular(double t, std::size_t N, double v) {
  double acc = 0.0;
  for (std::size_t n = 0; n <= N; ++n) {
    const double side = static_cast<double>(n + 1);
    double mins = 0.0;
    for (std::size_t k = 1; 2 * k <= n; ++k) {
      const double s = static_cast<double>(n + 1 - 2 * k);
      mins += s * s;
    }
    acc += std::exp(-4.0 * static_cast<double>(n) * t) * (side * side + v * mins);
  }
  return acc;
}

Rational psi_pnorm_bruteforce(const Rational& q, std::size_t N, std::size_t r,
                              const CumulantSpec& spec) {
  if (N > kMaxBruteforceN || r > kMaxBruteforceR || r == 0) {
    throw ResourceError("psi_pnorm_bruteforce: needs N <= " + std::to_string(kMaxBruteforceN) +
                        " and 1 <= r <= " + std::to_string(kMaxBruteforceR));
  }
  Rational total = 0;
  Rational weight = 1;
  const Rational q2 = q * q;
  for (std::size_t n = 0; n <= N; ++n, weight *= q2) {
    const auto comps = weak_compositions(n, r);
    Rational inner = 0;
    for (const auto& ones : comps) {
      for (const auto& stars : comps) {
        inner += rdiag_moment(spec, StarString::alternating(ones, stars));
      }
    }
    total += weight * inner;
  }
  return total;
}

double sum_exp(unsigned q_power, double t, std::size_t N) {
  double acc = q_power == 0 ? 1.0 : 0.0;
  for (std::size_t n = 1; n <= N; ++n) {
    const double x = static_cast<double>(n);
    acc += std::pow(x, static_cast<double>(q_power)) * std::exp(-x * t);
  }
  return acc;
}

FitReport fit_loglog(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw DomainError("fit_loglog: need at least two paired points");
  }
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::vector<double> lx, ly;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (!(xs[k] > 0) || !(ys[k] > 0)) throw DomainError("fit_loglog: values must be positive");
    lx.push_back(std::log(xs[k]));
    ly.push_back(std::log(ys[k]));
    sx += lx.back();
    sy += ly.back();
    sxx += lx.back() * lx.back();
    sxy += lx.back() * ly.back();
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw DomainError("fit_loglog: x values must be distinct");
  FitReport fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  double ss = 0.0;
  for (std::size_t k = 0; k < lx.size(); ++k) {
    const double e = ly[k] - (fit.intercept + fit.slope * lx[k]);
    ss += e * e;
  }
  fit.residual = std::sqrt(ss / n);
  fit.xs = xs;
  fit.ys = ys;
  return fit;
}

std::vector<double> log_grid(double t_min, double t_max, std::size_t points) {
  if (points == 0 || !(t_min > 0) || !(t_max >= t_min)) {
    throw DomainError("log_grid: need 0 < t_min <= t_max and at least one point");
  }
  std::vector<double> grid;
  if (points == 1) return {t_min};
  const double a = std::log(t_min);
  const double b = std::log(t_max);
  for (std::size_t k = 0; k < points; ++k) {
    grid.push_back(std::exp(a + (b - a) * static_cast<double>(k) / static_cast<double>(points - 1)));
  }
  grid.front() = t_min;
  grid.back() = t_max;
  return grid;
}

std::size_t truncation(double t, double c) {
  if (!(t > 0)) throw DomainError("truncation: t must be positive");
  return static_cast<std::size_t>(std::ceil(c / t));
}

FitReport sum_exp_slope(unsigned q_power, const std::vector<double>& grid, double c) {
  const auto values = parallel_map(grid.size(), [&](std::size_t k) {
    return sum_exp(q_power, grid[k], truncation(grid[k], c));
  });
  return fit_loglog(grid, values);
}

bool SlopeCheck::pass() const { return std::abs(fit.slope - target) <= tolerance; }

bool ScanResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const SlopeCheck& c) { return c.pass(); });
}

ScanResult ultracontractive_scan(const ScanConfig& cfg) {
  if (cfg.t_grid.empty()) throw DomainError("ultracontractive_scan: empty t grid");
  if (cfg.p != 2 && cfg.p != 4) throw DomainError("ultracontractive_scan: p must be 2 or 4");
  for (double t : cfg.t_grid) {
    if (!(t > 0 && t < 1)) throw DomainError("ultracontractive_scan: grid values must lie in (0,1)");
  }

  CumulantSpec spec;
  switch (cfg.model) {
    case ScanModel::Circular:
      spec = CumulantSpec::circular(2);
      break;
    case ScanModel::Haar:
      spec = CumulantSpec::haar_unitary(2);
      break;
    case ScanModel::Custom:
      spec = cfg.spec;
      break;
  }
  if (spec.d.size() < 2 || spec.d[0] != 1) {
    throw DomainError("ultracontractive_scan: spec must satisfy d_1 = 1 and give d_2");
  }
  const Rational v_exact = v_stat(spec);
  if (v_exact < 0) throw DomainError("ultracontractive_scan: needs v >= 0");

  ScanResult result;
  result.v = v_exact.get_d();
  const bool haar_like = v_exact == 0;

  result.rows = parallel_map(cfg.t_grid.size(), [&](std::size_t k) {
    ScanRow row;
    row.t = cfg.t_grid[k];
    row.N = truncation(row.t, cfg.c);
    row.norm2_sq = psi_norm2_sq(row.t, row.N, spec);
    row.norm2_sq_2t = psi_norm2_sq(2 * row.t, row.N, spec);
    row.norm4_4 = psi_4norm4_circular(row.t, row.N, result.v);
    const double norm_t = std::sqrt(row.norm2_sq);
    row.ratio_p = (cfg.p == 4 ? std::pow(row.norm4_4, 0.25) : std::sqrt(row.norm2_sq_2t)) / norm_t;
    row.ratio_inf = std::sqrt(row.norm4_4 / row.norm2_sq_2t) / norm_t;
    return row;
  });

  std::vector<double> ts, rp, rinf, a, b;
  for (const auto& row : result.rows) {
    ts.push_back(row.t);
    rp.push_back(row.ratio_p);
    rinf.push_back(row.ratio_inf);
    a.push_back(row.norm4_4);
    b.push_back(row.norm2_sq_2t);
  }
  const double p = cfg.p;
  // circular: -1 + 2/p; Haar: -1/2 + 1/p
  const double ratio_target = haar_like ? -0.5 + 1.0 / p : -1.0 + 2.0 / p;
  const bool fit_possible = ts.size() >= 2;
  auto check = [&](std::string name, double target, const std::vector<double>& ys) {
    SlopeCheck c{std::move(name), target, 0.1, {}};
    if (fit_possible) c.fit = fit_loglog(ts, ys);
    return c;
  };
  result.checks.push_back(check("ratio_p", ratio_target, rp));
  result.checks.push_back(check("ratio_inf", haar_like ? -0.5 : -1.0, rinf));
  result.checks.push_back(check("norm4_4", haar_like ? -3.0 : -4.0, a));
  result.checks.push_back(check("norm2_sq_2t", -1.0, b));
  return result;
}

}  // namespace rdiag
