// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Usage: acceptance [--expect-fail AC12 ...]
// Exit status is zero when every failing criterion was listed as expected.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rdiag/bounds.hpp"
#include "rdiag/cumulants.hpp"
#include "rdiag/mehler.hpp"
#include "rdiag/noncrossing.hpp"
#include "rdiag/normlab.hpp"
#include "rdiag/semigroup.hpp"

using namespace rdiag;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << what << "; ";
    if (!ok) pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Rational binom_oracle(unsigned long n, unsigned long k) {
  Rational acc = 1;
  for (unsigned long j = 1; j <= k; ++j) acc = acc * (n - k + j) / j;
  return acc;
}

Rational catalan_oracle(unsigned long n) { return binom_oracle(2 * n, n) / (n + 1); }

std::size_t cyclic_min_block(const std::vector<Symbol>& sym) {
  const std::size_t L = sym.size();
  std::size_t start = 0;
  while (start < L && sym[start] == sym[(start + L - 1) % L]) ++start;
  std::size_t best = L;
  std::size_t run = 0;
  for (std::size_t k = 0; k < L; ++k) {
    const std::size_t i = (start + k) % L;
    ++run;
    if (sym[i] != sym[(i + 1) % L]) {
      best = std::min(best, run);
      run = 0;
    }
  }
  return best;
}

std::size_t cyclic_one_blocks(const std::vector<Symbol>& sym) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < sym.size(); ++i) {
    if (sym[i] == Symbol::One && sym[(i + sym.size() - 1) % sym.size()] == Symbol::Star) ++count;
  }
  return count;
}

Outcome ac01() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t cases = 0;
  for (unsigned long n = 1; n <= 8; ++n) {
    for (unsigned long r = 1; n * r <= 8; ++r) {
      const auto s = StarString::alternating({n}, {n}).repeat(r);
      const Rational expect = binom_oracle((n + 1) * r, r) / (n * r + 1);
      o.require(Rational(count_nc2(s)) == expect, "n=" + std::to_string(n) + " r=" + std::to_string(r));
      o.require(Rational(fuss_catalan(n, r)) == expect, "fuss_catalan n=" + std::to_string(n));
      ++cases;
    }
  }
  const double t = seconds_since(start);
  o.require(t < 60.0, "runtime");
  o.detail << cases << " (n,r) pairs with nr<=8 in " << t << " s";
  return o;
}

Outcome ac02() {
  Outcome o;
  const auto s = parse_string("1^3 *^2 1 *^2");
  const auto nc = enumerate_nc_alternating(s);
  const auto nc2 = enumerate_nc2(s);
  o.require(nc.size() == 3 && nc2.size() == 2, "enumeration counts");
  o.require(oracle::nc_alternating(s).size() == 3, "set-partition oracle");
  o.detail << "|NC(S)|=" << nc.size() << " |NC_2(S)|=" << nc2.size();
  return o;
}

Outcome ac03() {
  Outcome o;
  std::size_t checked = 0;
  for (std::size_t len = 4; len <= 16; len += 2) {
    for (const auto& s : enumerate_balanced(len)) {
      const auto sym = s.symbols();
      if (cyclic_one_blocks(sym) != 2) continue;
      const std::size_t m = cyclic_min_block(sym);
      const auto nc2 = enumerate_nc2(s).size();
      const auto nc = enumerate_nc_alternating(s).size();
      o.require(nc2 == 1 + m && nc == 1 + 2 * m, format_string(s));
      o.require(count_nc2(s) == BigInt(nc2) && count_nc(s) == BigInt(nc), "dp " + format_string(s));
      const auto [a, b] = two_run_counts(s);
      o.require(a == BigInt(1 + m) && b == BigInt(1 + 2 * m), "closed form " + format_string(s));
      ++checked;
    }
  }
  o.detail << checked << " two-run strings of length <= 16";
  return o;
}

Outcome ac04() {
  Outcome o;
  const auto reports = verify_bounds(14);
  for (const auto& rep : reports) {
    const unsigned long r = rep.r;
    const Rational lower = pow(Rational(static_cast<long>(1 + rep.i)), r - 1);
    const Rational fc = binom_oracle((static_cast<unsigned long>(rep.h) + 1) * r, r) /
                        (static_cast<unsigned long>(rep.h) * r + 1);
    Rational poly = pow(Rational(static_cast<long>(r)), r - 1) * pow(Rational(rep.h + 1), r - 1);
    for (unsigned long k = 2; k <= r; ++k) poly /= k;
    const Rational count(rep.count_nc2);
    o.require(lower <= count && count <= fc && fc <= poly, "sandwich " + format_string(rep.string));
    o.require(rep.h <= static_cast<long>(rep.n), "h<=n " + format_string(rep.string));
    o.require(rep.pass(), "report " + format_string(rep.string));
  }
  o.detail << reports.size() << " balanced strings of length <= 14";
  return o;
}

Outcome ac05() {
  Outcome o;
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<unsigned long> den(1, 12);
  for (int trial = 0; trial < 100; ++trial) {
    MomentSeq m;
    for (int k = 0; k < 8; ++k) {
      Rational v(num(rng), den(rng));
      v.canonicalize();
      m.values.push_back(v);
    }
    o.require(cumulants_to_moments(moments_to_cumulants(m)) == m, "round trip");
    if (trial < 5) {
      const auto kappa = moments_to_cumulants(m);
      for (std::size_t n = 1; n <= 6; ++n) {
        MoebiusTable mu(n);
        Rational acc = 0;
        for (const auto& p : mu.lattice()) acc += phi_pi(m, p) * mu(p, SetPartition::one_block(n));
        o.require(acc == kappa[n - 1], "moebius n=" + std::to_string(n));
      }
    }
  }
  o.detail << "100 random sequences of length 8; Moebius agreement for n<=6";
  return o;
}

Outcome ac06() {
  Outcome o;
  const auto c = CumulantSpec::circular(8);
  std::size_t checked = 0;
  for (std::size_t len = 0; len <= 14; len += 2) {
    for (const auto& s : enumerate_balanced(len)) {
      o.require(rdiag_moment(c, s) == Rational(count_nc2(s)), format_string(s));
      ++checked;
    }
  }
  for (unsigned long n = 1; n <= 7; ++n) {
    const auto s = StarString::alternating(std::vector<std::size_t>(n, 1), std::vector<std::size_t>(n, 1));
    o.require(rdiag_moment(c, s) == catalan_oracle(n), "(cc*)^" + std::to_string(n));
  }
  o.detail << checked << " balanced strings; phi((cc*)^n)=Catalan(n) for n<=7";
  return o;
}

Outcome ac07() {
  Outcome o;
  const auto u = CumulantSpec::haar_unitary(6);
  for (std::size_t k = 1; k <= 6; ++k) {
    const auto s = StarString::alternating(std::vector<std::size_t>(k, 1), std::vector<std::size_t>(k, 1));
    o.require(rdiag_moment(u, s) == 1, "k=" + std::to_string(k));
  }
  CumulantSpec flipped = CumulantSpec::custom({-1, 1});  // (-1)^n C_{n-1}
  const Rational k2 = rdiag_moment(flipped, parse_string("1 * 1 *"));
  o.require(k2 != 1, "flipped sign unexpectedly passes");
  o.detail << "phi((uu*)^k)=1 for k<=6; flipped sign gives " << k2.get_str() << " at k=2";
  return o;
}

Outcome ac08() {
  Outcome o;
  std::vector<Rational> grid;
  for (int k = 1; k <= 9; ++k) {
    Rational r(k, 10);
    r.canonicalize();
    grid.push_back(r);
  }
  const auto two = markov_check(DiscreteMeasure::two_point(1), grid);
  for (const auto& row : two.rows) o.require(row.min_value == 1 - row.r && row.markovian, "two-point");
  const auto nu = DiscreteMeasure::three_point(Rational(1, 10), 1);
  o.require(mehler_eval(nu, Rational(1, 2), 1, -1) == Rational(-1, 2), "m(1/2; l, -l)");
  for (const auto& row : markov_check(nu, grid).rows) {
    o.require(row.markovian == (row.r <= Rational(1, 4)), "threshold at r=" + row.r.get_str());
  }
  for (const Rational& a : {Rational(1, 4), Rational(3, 10)}) {
    o.require(markov_check(DiscreteMeasure::three_point(a, 1), grid).markovian(), "a=" + a.get_str());
  }
  o.detail << "two-point min 1-r; a=1/10 fails exactly for r>1/4; a in {1/4,3/10} Markovian";
  return o;
}

Outcome ac09() {
  Outcome o;
  for (const Rational& q : {Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1)}) {
    const auto h = q_hermite(6, q);
    const auto m = moments_from_jacobi(h.jacobi, 12);
    for (std::size_t i = 0; i <= 6; ++i) {
      Rational qf = 1;
      for (std::size_t k = 1; k <= i; ++k) {
        Rational qk = 0;
        for (std::size_t j = 0; j < k; ++j) qk += pow(q, j);
        qf *= qk;
      }
      for (std::size_t j = 0; j <= 6; ++j) {
        const Polynomial prod = h.polys.p[i] * h.polys.p[j];
        Rational g = 0;
        for (std::size_t k = 0; k < prod.coeffs().size(); ++k) g += prod.coeffs()[k] * m.at(k);
        o.require(g == (i == j ? qf : Rational(0)), "gram q=" + q.get_str());
      }
    }
  }
  const auto m0 = moments_from_jacobi(q_hermite(6, 0).jacobi, 12);
  const auto m1 = moments_from_jacobi(q_hermite(6, 1).jacobi, 12);
  for (unsigned long n = 1; n <= 6; ++n) {
    o.require(m0.at(2 * n) == catalan_oracle(n), "q=0 moments");
    Rational df = 1;
    for (unsigned long j = 1; j < 2 * n; j += 2) df *= j;
    o.require(m1.at(2 * n) == df, "q=1 moments");
  }
  o.detail << "n<=6, q in {-1,-1/2,0,1/2,1}";
  return o;
}

Outcome ac10() {
  Outcome o;
  // mu_1: normalized symmetric three-point law with m_2k = 2^(k-1); alpha_31 = 2
  MeasureMap measures;
  MomentSeq m1, sc = semicircle_moments(24);
  for (std::size_t k = 1; k <= 24; ++k) m1.values.push_back(k % 2 ? Rational(0) : pow(Rational(2), k / 2) / 2);
  measures.emplace(1, m1);
  measures.emplace(2, sc);
  const auto w = parse_word("a1* a1 a1* a2^2 a1*");
  const Rational alpha31 = m1.at(4) / m1.at(2);
  const WordCombination expect{{{QPoly::monomial(6), w},
                                {alpha31 * (QPoly::monomial(4) - QPoly::monomial(6)), parse_word("a1* a2^2 a1*")}}};
  o.require(markov_Tt(w, measures) == expect, "golden word");

  std::size_t identity = 0, star_free = 0, roundtrip = 0;
  for (std::size_t len = 0; len <= 6; ++len) {
    for (const auto& v : enumerate_words(len, 2)) {
      const auto t = markov_Tt(v, measures);
      if (len <= 5) {
        o.require(evaluate(t, 1) == RationalCombination{{v, 1}}, "identity at q=1: " + format_word(v));
        ++identity;
      }
      const bool has_star = std::any_of(v.letters.begin(), v.letters.end(), [](const Letter& l) { return l.adjoint; });
      if (!has_star) {
        o.require(t == generic_Dt(v), "star-free " + format_word(v));
        ++star_free;
      }
    }
  }
  for (std::size_t len = 0; len <= 8; ++len) {
    for (const auto& v : enumerate_words(len, 3)) {
      if (xs_roundtrip(v) != v) o.require(false, "roundtrip " + format_word(v));
      ++roundtrip;
    }
  }
  o.detail << "golden word exact; identity on " << identity << " words; " << star_free
           << " star-free words; roundtrip on " << roundtrip << " words";
  return o;
}

Outcome ac11() {
  Outcome o;
  double worst = 0.0;
  for (double r : {0.3, 0.5, 0.9}) {
    for (int k = -5; k <= 5; ++k) {
      worst = std::max(worst, std::abs(poisson_fourier(r, k, 4096) - std::pow(r, std::abs(k))));
    }
  }
  o.require(worst <= 1e-10, "max error");
  o.detail << "max |error| = " << worst;
  return o;
}

Outcome ac12() {
  Outcome o;
  const auto start = Clock::now();
  const auto grid = log_grid(0.005, 0.05, 10);
  std::ostringstream d;
  auto slope = [&](const std::string& name, double value, double target, double tol) {
    const bool ok = std::abs(value - target) <= tol;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s %.4f (target %g +- %g)%s", name.c_str(), value, target, tol, ok ? "" : " MISS");
    if (!d.str().empty()) d << "; ";
    d << buf;
    if (!ok) o.pass = false;
  };
  for (unsigned q : {1u, 2u, 3u}) {
    slope("sum n^" + std::to_string(q), sum_exp_slope(q, grid).slope, -(q + 1.0), 0.05);
  }
  const auto c = CumulantSpec::circular(2);
  double worst = 0.0;
  for (double t : grid) {
    const double closed = 1.0 / (1.0 - std::exp(-2.0 * t));
    worst = std::max(worst, std::abs(psi_norm2_sq(t, truncation(t, 40), c) / closed - 1.0));
  }
  if (worst > 1e-12) o.pass = false;
  d << "; |psi_t|_2^2 rel err " << worst;
  ScanConfig cfg;
  cfg.t_grid = grid;
  const auto circ = ultracontractive_scan(cfg);
  slope("circular A", circ.checks[2].fit.slope, -4.0, 0.1);
  slope("circular R4", circ.checks[0].fit.slope, -0.5, 0.1);
  slope("circular Rinf", circ.checks[1].fit.slope, -1.0, 0.1);
  cfg.model = ScanModel::Haar;
  const auto haar = ultracontractive_scan(cfg);
  slope("haar A", haar.checks[2].fit.slope, -3.0, 0.1);
  slope("haar Rinf", haar.checks[1].fit.slope, -0.5, 0.1);
  const double t = seconds_since(start);
  if (t > 300.0) o.pass = false;
  o.detail << d.str() << "; " << t << " s";
  return o;
}

Outcome ac13() {
  Outcome o;
  const double exact = psi_pnorm_bruteforce(Rational(1, 2), 6, 2, CumulantSpec::circular(12)).get_d();
  const double pipeline = psi_4norm4_circular(std::log(2.0) / 2.0, 6, 1.0);
  o.require(std::abs(exact - pipeline) <= 1e-12, "r=2 float mismatch");
  const Rational q(1, 2);
  Rational sum = 0;
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto comps = weak_compositions(n, 3);
    for (const auto& a : comps)
      for (const auto& b : comps) sum += pow(q, 2 * n) * Rational(count_nc2(StarString::alternating(a, b)));
  }
  o.require(psi_pnorm_bruteforce(q, 5, 3, CumulantSpec::circular(15)) == sum, "r=3 exact mismatch");
  o.detail << "r=2: |exact - float| = " << std::abs(exact - pipeline) << "; r=3 N=5 exact";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<std::string> expected;
  for (int k = 1; k < argc; ++k) {
    if (std::string(argv[k]) == "--expect-fail" && k + 1 < argc) expected.insert(argv[++k]);
  }
  const std::vector<std::pair<std::string, std::pair<std::string, std::function<Outcome()>>>> criteria{
      {"AC01", {"Fuss-Catalan reproduction", ac01}},
      {"AC02", {"Mixed-run string counts", ac02}},
      {"AC03", {"Two-run closed forms", ac03}},
      {"AC04", {"Bound sandwich", ac04}},
      {"AC05", {"Moment-cumulant round trip", ac05}},
      {"AC06", {"Circular moments", ac06}},
      {"AC07", {"Haar-unitary sign oracle", ac07}},
      {"AC08", {"Mehler examples", ac08}},
      {"AC09", {"q-Hermite orthogonality", ac09}},
      {"AC10", {"Semigroup golden test", ac10}},
      {"AC11", {"Poisson Fourier coefficients", ac11}},
      {"AC12", {"Exponent fits", ac12}},
      {"AC13", {"Exact/float cross-check", ac13}},
  };
  int unexpected = 0;
  int failed = 0;
  for (const auto& [id, entry] : criteria) {
    const auto& [title, fn] = entry;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    std::printf("[%s] %s %s: %s\n", o.pass ? "PASS" : "FAIL", id.c_str(), title.c_str(), o.detail.str().c_str());
    std::fflush(stdout);
    if (!o.pass) {
      ++failed;
      if (!expected.contains(id)) ++unexpected;
    }
  }
  std::printf("%d/%zu criteria passed", static_cast<int>(criteria.size()) - failed, criteria.size());
  if (failed > 0) std::printf(" (%d failure%s expected)", failed - unexpected, failed - unexpected == 1 ? "" : "s");
  std::printf("\n");
  return unexpected == 0 ? 0 : 1;
}
