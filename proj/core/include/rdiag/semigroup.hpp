#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "rdiag/cumulants.hpp"
#include "rdiag/polynomial.hpp"
#include "rdiag/words.hpp"

namespace rdiag {

/// Polynomial in the formal variable q = e^{-t}.
using QPoly = Polynomial;

/// x_j^power for generator >= 1, or s (generator 0, power 1).
struct XSToken {
  std::size_t generator;
  std::size_t power;
  friend bool operator==(const XSToken&, const XSToken&) = default;
  friend auto operator<=>(const XSToken&, const XSToken&) = default;
};

/// A monomial in x_1, x_2, ... and s, reduced by s^2 = 1 and with adjacent
/// powers of the same x_j merged.
struct XSWord {
  std::vector<XSToken> tokens;
  friend bool operator==(const XSWord&, const XSWord&) = default;
  friend auto operator<=>(const XSWord&, const XSWord&) = default;
};

/// Merges adjacent equal generators, cancels s s and drops zero powers.
XSWord simplify(std::vector<XSToken> tokens);

/// a_j -> s x_j, a_j^* -> x_j s, then simplify.
XSWord to_xs(const GeneratorWord& w);

/// Inverse of to_xs. The first x_j becomes a_j when preceded by s and a_j^*
/// otherwise; a gap without s between consecutive x letters flips this
/// orientation and a gap with s keeps it. Throws DomainError when the trailing
/// s does not match, i.e. the monomial is not the image of a word.
GeneratorWord from_xs(const XSWord& w);

/// `x1^3 x2 s x2 x1 s`; the empty monomial is `1`.
std::string format_xs(const XSWord& w);

GeneratorWord xs_roundtrip(const GeneratorWord& w);

struct Term {
  QPoly coeff;
  GeneratorWord word;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Terms have distinct words and nonzero coefficients; longer words first,
/// then word order.
struct WordCombination {
  std::vector<Term> terms;
  friend bool operator==(const WordCombination&, const WordCombination&) = default;
};

WordCombination make_combination(const std::map<GeneratorWord, QPoly>& terms);

/// q^{|sum of exponents|} times the word.
WordCombination generic_Dt(const GeneratorWord& w);

/// Distributions of the x_j, given by moments. Each must be symmetric with
/// m_2 = 1 and carry at least 2 * len(w) moments.
using MeasureMap = std::map<std::size_t, MomentSeq>;

/// The free product of the Mehler multipliers M_{mu_j}(q) with the identity on
/// s, applied to w = the x/s monomial of the word. The monomial is split into
/// alternating centered factors (constants are pulled out and the neighbours
/// re-merged), each x_j factor is scaled by q^l on its p_l component, and the
/// result is re-expanded into words.
WordCombination markov_Tt(const GeneratorWord& w, const MeasureMap& measures);

/// Trace of an x/s monomial in the free product of the mu_j with the
/// symmetric +-1 law of s.
Rational xs_trace(const XSWord& w, const MeasureMap& measures);

using RationalCombination = std::map<GeneratorWord, Rational>;

RationalCombination evaluate(const WordCombination& c, const Rational& q);
/// Linear extension of markov_Tt at a fixed q.
RationalCombination apply_markov(const RationalCombination& c, const MeasureMap& measures,
                                 const Rational& q);
/// Linear extension of generic_Dt at a fixed q.
RationalCombination apply_generic(const RationalCombination& c, const Rational& q);

/// [{"coeff": {"monomials": {"<degree>": "p/q"}}, "word": "..."}]
std::string combination_to_json(const WordCombination& c);

/// (1 - r^2) / (1 - 2 r cos(theta) + r^2). Requires 0 <= r < 1.
double poisson_eval(double r, double theta);
/// k-th Fourier coefficient of the Poisson kernel by the trapezoid rule on
/// quad_points equispaced nodes; equals r^{|k|} up to aliasing.
double poisson_fourier(double r, int k, std::size_t quad_points);

}  // namespace rdiag
