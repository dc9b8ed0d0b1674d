#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rdiag/noncrossing.hpp"
#include "rdiag/rational.hpp"
#include "rdiag/strings.hpp"
#include "rdiag/words.hpp"

namespace rdiag {

/// Moments m_1..m_N of a single variable; m_0 = 1 is implicit.
struct MomentSeq {
  std::vector<Rational> values;

  std::size_t size() const noexcept { return values.size(); }
  /// m_k with m_0 = 1. Throws DomainError past the end.
  Rational at(std::size_t k) const;

  friend bool operator==(const MomentSeq&, const MomentSeq&) = default;
};

enum class SpecKind { Circular, HaarUnitary, FromEvenMeasure, Custom };

std::string to_string(SpecKind kind);
SpecKind parse_spec_kind(std::string_view text);

/// Determining sequence d_n = kappa_2n[a, a*, ..., a, a*] of an R-diagonal
/// element. kappa_2n[a*, a, ...] is taken equal to d_n; all other cumulants
/// vanish.
struct CumulantSpec {
  SpecKind kind = SpecKind::Custom;
  std::vector<Rational> d;

  /// d = (1, 0, 0, ...), length n.
  static CumulantSpec circular(std::size_t n);
  /// d_k = (-1)^(k-1) Catalan(k-1), length n.
  static CumulantSpec haar_unitary(std::size_t n);
  static CumulantSpec custom(std::vector<Rational> d);

  friend bool operator==(const CumulantSpec&, const CumulantSpec&) = default;
};

/// Free cumulants kappa_1..kappa_N by the subtraction recursion
/// kappa_n = m_n - sum over pi != 1_n of kappa_pi, organized by the block of 1.
std::vector<Rational> moments_to_cumulants(const MomentSeq& m);

/// m_n = sum over pi in NC(n) of kappa_pi.
MomentSeq cumulants_to_moments(const std::vector<Rational>& kappa);

/// Product of m_|V| over blocks. Throws DomainError if a block exceeds N.
Rational phi_pi(const MomentSeq& m, const SetPartition& p);
/// Product of kappa_|V| over blocks.
Rational kappa_pi(const std::vector<Rational>& kappa, const SetPartition& p);

/// phi(a^S) = sum over NC(S) of the product of d_{|V|/2}. Zero for unbalanced
/// S. Requires spec.d to reach length(S)/2.
Rational rdiag_moment(const CumulantSpec& spec, const StarString& s);

/// Same value, summed over an explicit enumeration of NC(S).
Rational rdiag_moment_enumerated(const CumulantSpec& spec, const StarString& s);

/// ||a^n||_2^2 = phi(a^n a*^n). Only the fully nested pairing lies in
/// NC(1^n, *^n), so this is d_1^n for any n.
Rational rdiag_norm(const CumulantSpec& spec, std::size_t n);

/// Mixed moment of *-free R-diagonal generators: blocks must additionally be
/// constant in the generator index.
Rational mixed_moment(const std::map<std::size_t, CumulantSpec>& specs, const GeneratorWord& w);

/// Determining sequence of the symmetric measure with the given moments,
/// after rescaling to m_2 = 1. Throws DomainError if an odd moment is nonzero.
CumulantSpec from_even_measure(const MomentSeq& m);

/// ||a||_4^4 = phi(a a* a a*).
Rational fourth_moment(const CumulantSpec& spec);

/// v(a) = ||a||_4^4 - 1.
Rational v_stat(const CumulantSpec& spec);

/// kappa_4[a, a*, a, a*] == ||a||_4^4 - 2 for a spec with d_1 = 1.
bool kappa4_identity_holds(const CumulantSpec& spec);

/// {"kind": ..., "d": ["p/q", ...]}
std::string spec_to_json(const CumulantSpec& spec);
CumulantSpec spec_from_json(std::string_view text);

}  // namespace rdiag
