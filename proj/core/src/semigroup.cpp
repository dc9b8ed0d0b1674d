#include "rdiag/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rdiag/errors.hpp"
#include "rdiag/json_io.hpp"
#include "rdiag/mehler.hpp"

namespace rdiag {

XSWord simplify(std::vector<XSToken> tokens) {
  XSWord out;
  auto& st = out.tokens;
  for (const XSToken& t : tokens) {
    if (t.power == 0) continue;
    if (t.generator == 0) {
      // s^k reduces to s^(k mod 2)
      if (t.power % 2 == 0) continue;
      if (!st.empty() && st.back().generator == 0) {
        st.pop_back();
      } else {
        st.push_back({0, 1});
      }
      continue;
    }
    if (!st.empty() && st.back().generator == t.generator) {
      st.back().power += t.power;
    } else {
      st.push_back(t);
    }
  }
  return out;
}

XSWord to_xs(const GeneratorWord& w) {
  std::vector<XSToken> tokens;
  for (const Letter& l : w.letters) {
    if (l.adjoint) {
      tokens.push_back({l.generator, 1});
      tokens.push_back({0, 1});
    } else {
      tokens.push_back({0, 1});
      tokens.push_back({l.generator, 1});
    }
  }
  return simplify(std::move(tokens));
}

GeneratorWord from_xs(const XSWord& w) {
  GeneratorWord out;
  bool leading_s = false;
  bool gap_has_s = false;
  bool seen_x = false;
  bool star = false;
  for (const XSToken& t : w.tokens) {
    if (t.generator == 0) {
      if (seen_x) {
        gap_has_s = true;
      } else {
        leading_s = true;
      }
      continue;
    }
    for (std::size_t k = 0; k < t.power; ++k) {
      if (!seen_x) {
        star = !leading_s;
        seen_x = true;
      } else if (!gap_has_s) {
        star = !star;
      }
      gap_has_s = false;
      out.letters.push_back({t.generator, star});
    }
  }
  const bool trailing_s = seen_x ? gap_has_s : leading_s;
  if (!seen_x ? trailing_s : trailing_s != star) {
    throw DomainError("x/s monomial '" + format_xs(w) + "' is not the image of a word");
  }
  return out;
}

std::string format_xs(const XSWord& w) {
  if (w.tokens.empty()) return "1";
  std::string out;
  for (const XSToken& t : w.tokens) {
    if (!out.empty()) out += ' ';
    if (t.generator == 0) {
      out += 's';
    } else {
      out += 'x' + std::to_string(t.generator);
      if (t.power > 1) out += '^' + std::to_string(t.power);
    }
  }
  return out;
}

GeneratorWord xs_roundtrip(const GeneratorWord& w) { return from_xs(to_xs(w)); }

WordCombination make_combination(const std::map<GeneratorWord, QPoly>& terms) {
  WordCombination out;
  for (const auto& [word, coeff] : terms) {
    if (!coeff.is_zero()) out.terms.push_back({coeff, word});
  }
  std::stable_sort(out.terms.begin(), out.terms.end(), [](const Term& a, const Term& b) {
    return a.word.size() > b.word.size();
  });
  return out;
}

WordCombination generic_Dt(const GeneratorWord& w) {
  long balance = 0;
  for (const Letter& l : w.letters) balance += l.adjoint ? -1 : 1;
  return WordCombination{{Term{QPoly::monomial(static_cast<std::size_t>(std::labs(balance))), w}}};
}

namespace {

/// An element of one free factor: a polynomial in x_j, or c0 + c1 s for s.
struct Element {
  std::size_t generator;
  Polynomial f;
};

using Sequence = std::vector<Element>;

struct Model {
  const MeasureMap& measures;
  std::map<std::size_t, PolySeq> bases;

  Rational trace(const Element& e) const {
    if (e.generator == 0) return e.f.coeff(0);
    const MomentSeq& m = measures.at(e.generator);
    Rational acc = 0;
    for (std::size_t k = 0; k < e.f.coeffs().size(); ++k) acc += e.f.coeffs()[k] * m.at(k);
    return acc;
  }
};

Polynomial reduce_s(const Polynomial& f) {
  Rational even = 0;
  Rational odd = 0;
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) (k % 2 == 0 ? even : odd) += f.coeffs()[k];
  return Polynomial({even, odd});
}

Sequence merge(Sequence seq) {
  Sequence out;
  for (auto& e : seq) {
    if (!out.empty() && out.back().generator == e.generator) {
      out.back().f *= e.f;
      if (e.generator == 0) out.back().f = reduce_s(out.back().f);
    } else {
      out.push_back(std::move(e));
    }
  }
  return out;
}

/// Writes seq as a sum of coefficient times alternating products of centered
/// elements.
void center(const Model& model, Sequence seq, const Rational& coef,
            std::vector<std::pair<Rational, Sequence>>& out) {
  seq = merge(std::move(seq));
  for (const auto& e : seq) {
    if (e.f.is_zero()) return;
  }
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const Rational c = model.trace(seq[k]);
    if (c == 0) continue;
    Sequence centered = seq;
    centered[k].f -= Polynomial(c);
    if (!centered[k].f.is_zero()) center(model, std::move(centered), coef, out);
    Sequence removed = seq;
    removed.erase(removed.begin() + static_cast<long>(k));
    center(model, std::move(removed), coef * c, out);
    return;
  }
  out.emplace_back(coef, std::move(seq));
}

Sequence elements_of(const XSWord& w) {
  Sequence seq;
  for (const XSToken& t : w.tokens) {
    seq.push_back({t.generator, Polynomial::monomial(t.power)});
  }
  return seq;
}

Model make_model(const MeasureMap& measures, const XSWord& w, bool need_bases) {
  Model model{measures, {}};
  std::size_t degree = 0;
  for (const XSToken& t : w.tokens) {
    if (t.generator == 0) continue;
    degree += t.power;
  }
  for (const XSToken& t : w.tokens) {
    if (t.generator == 0 || model.bases.contains(t.generator)) continue;
    auto it = measures.find(t.generator);
    if (it == measures.end()) {
      throw DomainError("no distribution given for x" + std::to_string(t.generator));
    }
    const MomentSeq& m = it->second;
    for (std::size_t k = 1; k <= m.size(); k += 2) {
      if (m.at(k) != 0) {
        throw DomainError("distribution of x" + std::to_string(t.generator) + " is not symmetric");
      }
    }
    if (m.size() < 2 || m.at(2) != 1) {
      throw DomainError("distribution of x" + std::to_string(t.generator) +
                        " must be normalized to m_2 = 1");
    }
    const std::size_t needed = need_bases ? 2 * degree : degree;
    if (m.size() < needed) {
      throw DomainError("distribution of x" + std::to_string(t.generator) + " needs " +
                        std::to_string(needed) + " moments");
    }
    if (need_bases) model.bases.emplace(t.generator, gram_schmidt(m, degree));
  }
  return model;
}

/// Polynomial in x with QPoly coefficients, indexed by x-degree.
using QCoeffs = std::vector<QPoly>;

QCoeffs multiplier_symbolic(const PolySeq& ps, const Polynomial& f) {
  const auto beta = expand_in_basis(ps, f);
  QCoeffs out(beta.size());
  for (std::size_t l = 0; l < beta.size(); ++l) {
    if (beta[l] == 0) continue;
    const auto& pl = ps.p[l].coeffs();
    for (std::size_t k = 0; k < pl.size(); ++k) {
      if (pl[k] != 0) out[k] += QPoly::monomial(l, beta[l] * pl[k]);
    }
  }
  return out;
}

}  // namespace

WordCombination markov_Tt(const GeneratorWord& w, const MeasureMap& measures) {
  const XSWord xs = to_xs(w);
  const Model model = make_model(measures, xs, true);

  std::vector<std::pair<Rational, Sequence>> centered;
  center(model, elements_of(xs), Rational(1), centered);

  std::map<GeneratorWord, QPoly> acc;
  for (const auto& [coef, seq] : centered) {
    std::vector<std::pair<std::vector<XSToken>, QPoly>> partial{{{}, QPoly(coef)}};
    for (const Element& e : seq) {
      QCoeffs factor;
      if (e.generator == 0) {
        factor = {QPoly(e.f.coeff(0)), QPoly(e.f.coeff(1))};
      } else {
        factor = multiplier_symbolic(model.bases.at(e.generator), e.f);
      }
      std::vector<std::pair<std::vector<XSToken>, QPoly>> next;
      for (const auto& [tokens, c] : partial) {
        for (std::size_t k = 0; k < factor.size(); ++k) {
          if (factor[k].is_zero()) continue;
          auto extended = tokens;
          extended.push_back({e.generator, k});
          next.emplace_back(std::move(extended), c * factor[k]);
        }
      }
      partial = std::move(next);
    }
    for (auto& [tokens, c] : partial) acc[from_xs(simplify(std::move(tokens)))] += c;
  }
  return make_combination(acc);
}

Rational xs_trace(const XSWord& w, const MeasureMap& measures) {
  const Model model = make_model(measures, w, false);
  std::vector<std::pair<Rational, Sequence>> centered;
  center(model, elements_of(w), Rational(1), centered);
  Rational total = 0;
  for (const auto& [coef, seq] : centered) {
    if (seq.empty()) total += coef;
  }
  return total;
}

RationalCombination evaluate(const WordCombination& c, const Rational& q) {
  RationalCombination out;
  for (const Term& t : c.terms) {
    const Rational v = t.coeff(q);
    if (v != 0) out[t.word] += v;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

namespace {

template <typename Fn>
RationalCombination apply_linear(const RationalCombination& c, const Rational& q, Fn&& action) {
  RationalCombination out;
  for (const auto& [word, coef] : c) {
    for (const auto& [w, v] : evaluate(action(word), q)) out[w] += coef * v;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

RationalCombination apply_markov(const RationalCombination& c, const MeasureMap& measures,
                                 const Rational& q) {
  return apply_linear(c, q, [&](const GeneratorWord& w) { return markov_Tt(w, measures); });
}

RationalCombination apply_generic(const RationalCombination& c, const Rational& q) {
  return apply_linear(c, q, [](const GeneratorWord& w) { return generic_Dt(w); });
}

std::string combination_to_json(const WordCombination& c) {
  Json arr = Json::array();
  for (const Term& t : c.terms) {
    Json monomials = Json::object();
    for (std::size_t k = 0; k < t.coeff.coeffs().size(); ++k) {
      if (t.coeff.coeffs()[k] != 0) monomials[std::to_string(k)] = to_string(t.coeff.coeffs()[k]);
    }
    Json coeff = Json::object();
    coeff["monomials"] = std::move(monomials);
    Json item = Json::object();
    item["coeff"] = std::move(coeff);
    item["word"] = format_word(t.word);
    arr.push_back(std::move(item));
  }
  return dump(arr);
}

double poisson_eval(double r, double theta) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("poisson kernel needs 0 <= r < 1");
  return (1.0 - r * r) / (1.0 - 2.0 * r * std::cos(theta) + r * r);
}

double poisson_fourier(double r, int k, std::size_t quad_points) {
  if (quad_points == 0) throw DomainError("poisson_fourier needs at least one node");
  double acc = 0.0;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(quad_points);
  for (std::size_t j = 0; j < quad_points; ++j) {
    const double theta = step * static_cast<double>(j);
    acc += poisson_eval(r, theta) * std::cos(static_cast<double>(k) * theta);
  }
  return acc / static_cast<double>(quad_points);
}

}  // namespace rdiag
