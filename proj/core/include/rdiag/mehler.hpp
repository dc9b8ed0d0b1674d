#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rdiag/cumulants.hpp"
#include "rdiag/polynomial.hpp"
#include "rdiag/rational.hpp"

namespace rdiag {

struct Atom {
  Rational x;
  Rational w;
  friend bool operator==(const Atom&, const Atom&) = default;
};

/// A probability measure with finitely many atoms. Construction checks that
/// points are distinct, weights are positive and sum to one; atoms are kept
/// sorted by point.
class DiscreteMeasure {
 public:
  explicit DiscreteMeasure(std::vector<Atom> atoms);

  /// (delta_lambda + delta_-lambda)/2.
  static DiscreteMeasure two_point(const Rational& lambda);
  /// a (delta_lambda + delta_-lambda) + (1 - 2a) delta_0, with 0 < a < 1/2.
  static DiscreteMeasure three_point(const Rational& a, const Rational& lambda);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  std::size_t support_size() const noexcept { return atoms_.size(); }
  bool is_symmetric() const;
  /// m_1..m_n.
  MomentSeq moments(std::size_t n) const;

 private:
  std::vector<Atom> atoms_;
};

/// {"atoms": [{"x": "p/q", "w": "p/q"}, ...]}
std::string measure_to_json(const DiscreteMeasure& mu);
DiscreteMeasure measure_from_json(std::string_view text);

/// Monic orthogonal polynomials p_0..p_K and their squared norms. A norm of
/// zero marks a polynomial that vanishes on the support.
struct PolySeq {
  std::vector<Polynomial> p;
  std::vector<Rational> norms;

  std::size_t size() const noexcept { return p.size(); }
};

/// Coefficients b_1..b_K of p_{n+1} = x p_n - b_n p_{n-1}.
struct JacobiCoeffs {
  std::vector<Rational> b;
};

/// Gram-Schmidt on 1, x, ..., x^K under the moment functional. Needs 2K
/// moments. Projections onto zero-norm polynomials are skipped, so every p_n
/// stays monic of degree n. Throws DomainError on a negative norm.
PolySeq gram_schmidt(const MomentSeq& m, std::size_t K);

/// b_n = |p_n|^2 / |p_{n-1}|^2, zero once a norm vanishes.
JacobiCoeffs jacobi_from_polys(const PolySeq& ps);

/// Runs p_{n+1} = x p_n - b_n p_{n-1} up to degree K; norms are products of b.
PolySeq polys_from_jacobi(const JacobiCoeffs& b, std::size_t K);

/// [n]_q = 1 + q + ... + q^(n-1).
Rational q_integer(std::size_t n, const Rational& q);
/// [n]_q! = [n]_q [n-1]_q ... [1]_q.
Rational q_factorial(std::size_t n, const Rational& q);

struct QHermite {
  PolySeq polys;
  JacobiCoeffs jacobi;
};

/// q-Hermite polynomials H_0..H_K with b_n = [n]_q. Requires -1 <= q <= 1.
QHermite q_hermite(std::size_t K, const Rational& q);

/// Moments m_1..m_N of the symmetric functional with the given Jacobi
/// coefficients, as weighted Dyck path sums. Needs N <= 2 * b.size().
MomentSeq moments_from_jacobi(const JacobiCoeffs& b, std::size_t N);

/// Sum over n with |p_n|^2 > 0 of r^n p_n(x) p_n(y) / |p_n|^2.
Rational mehler_eval(const DiscreteMeasure& mu, const Rational& r, const Rational& x,
                     const Rational& y);

/// Kernel matrix over support pairs, rows and columns in atom order.
std::vector<std::vector<Rational>> mehler_matrix(const DiscreteMeasure& mu, const Rational& r);

struct MarkovRow {
  Rational r;
  Rational min_value;
  bool markovian = false;               // kernel >= 0 on the support
  bool positivity_preserving = false;   // M(r) maps indicators to f >= 0
  Rational l1_norm;                     // operator norm on L^1(mu)
  Rational linf_norm;                   // operator norm on L^inf(mu)
  bool trace_preserving = false;        // integral of M(r) g equals integral of g
};

struct MarkovReport {
  std::vector<MarkovRow> rows;
  bool markovian() const;
};

MarkovReport markov_check(const DiscreteMeasure& mu, const std::vector<Rational>& r_grid);

/// Coefficients c_0..c_deg of f = sum c_k p_k. Throws DomainError if
/// deg f >= ps.size().
std::vector<Rational> expand_in_basis(const PolySeq& ps, const Polynomial& f);

/// sum_k r^k c_k p_k for f = sum_k c_k p_k.
Polynomial multiplier_apply(const PolySeq& ps, const Rational& r, const Polynomial& f);

/// alpha_{n,0..n} with x^n = sum_k alpha_{n,k} p_k.
std::vector<Rational> monomial_alpha(const PolySeq& ps, std::size_t n);

/// Semicircle moments m_1..m_n (Catalan numbers at even orders).
MomentSeq semicircle_moments(std::size_t n);

}  // namespace rdiag
