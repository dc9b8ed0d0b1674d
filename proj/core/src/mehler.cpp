#include "rdiag/mehler.hpp"

#include <algorithm>
#include <set>

#include "rdiag/errors.hpp"
#include "rdiag/json_io.hpp"

namespace rdiag {

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw DomainError("measure needs at least one atom");
  std::sort(atoms_.begin(), atoms_.end(), [](const Atom& a, const Atom& b) { return a.x < b.x; });
  Rational total = 0;
  for (std::size_t k = 0; k < atoms_.size(); ++k) {
    if (atoms_[k].w <= 0) {
      throw DomainError("atom at " + to_string(atoms_[k].x) + " has non-positive weight");
    }
    if (k > 0 && atoms_[k].x == atoms_[k - 1].x) {
      throw DomainError("duplicate atom at " + to_string(atoms_[k].x));
    }
    total += atoms_[k].w;
  }
  if (total != 1) throw DomainError("weights sum to " + to_string(total) + ", expected 1");
}

DiscreteMeasure DiscreteMeasure::two_point(const Rational& lambda) {
  if (lambda <= 0) throw DomainError("two_point: lambda must be positive");
  return DiscreteMeasure({{-lambda, Rational(1, 2)}, {lambda, Rational(1, 2)}});
}

DiscreteMeasure DiscreteMeasure::three_point(const Rational& a, const Rational& lambda) {
  if (lambda <= 0) throw DomainError("three_point: lambda must be positive");
  if (a <= 0 || a >= Rational(1, 2)) throw DomainError("three_point: need 0 < a < 1/2");
  return DiscreteMeasure({{-lambda, a}, {Rational(0), 1 - 2 * a}, {lambda, a}});
}

bool DiscreteMeasure::is_symmetric() const {
  const std::size_t n = atoms_.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Atom& lo = atoms_[k];
    const Atom& hi = atoms_[n - 1 - k];
    if (lo.x != -hi.x || lo.w != hi.w) return false;
  }
  return true;
}

MomentSeq DiscreteMeasure::moments(std::size_t n) const {
  MomentSeq m{std::vector<Rational>(n, Rational(0))};
  for (const Atom& a : atoms_) {
    Rational power = 1;
    for (std::size_t k = 0; k < n; ++k) {
      power *= a.x;
      m.values[k] += a.w * power;
    }
  }
  return m;
}

std::string measure_to_json(const DiscreteMeasure& mu) {
  Json atoms = Json::array();
  for (const Atom& a : mu.atoms()) {
    Json item = Json::object();
    item["x"] = to_string(a.x);
    item["w"] = to_string(a.w);
    atoms.push_back(std::move(item));
  }
  Json j = Json::object();
  j["atoms"] = std::move(atoms);
  return dump(j);
}

DiscreteMeasure measure_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("atoms") || !j["atoms"].is_array()) {
    throw ParseError("measure JSON needs an array field 'atoms'", 0);
  }
  std::vector<Atom> atoms;
  for (const auto& item : j["atoms"]) {
    if (!item.is_object() || !item.contains("x") || !item.contains("w") || !item["x"].is_string() ||
        !item["w"].is_string()) {
      throw ParseError("each atom needs string fields 'x' and 'w'", 0);
    }
    atoms.push_back({parse_rational(item["x"].get<std::string>()),
                     parse_rational(item["w"].get<std::string>())});
  }
  return DiscreteMeasure(std::move(atoms));
}

namespace {

Rational inner(const MomentSeq& m, const Polynomial& f, const Polynomial& g) {
  Rational acc = 0;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (f.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
      if (g.coeffs()[j] == 0) continue;
      acc += f.coeffs()[i] * g.coeffs()[j] * m.at(i + j);
    }
  }
  return acc;
}

}  // namespace

PolySeq gram_schmidt(const MomentSeq& m, std::size_t K) {
  if (m.size() < 2 * K) {
    throw DomainError("gram_schmidt: degree " + std::to_string(K) + " needs " +
                      std::to_string(2 * K) + " moments, got " + std::to_string(m.size()));
  }
  PolySeq ps;
  for (std::size_t n = 0; n <= K; ++n) {
    const Polynomial xn = Polynomial::monomial(n);
    Polynomial p = xn;
    for (std::size_t k = 0; k < n; ++k) {
      if (ps.norms[k] == 0) continue;
      p -= (inner(m, xn, ps.p[k]) / ps.norms[k]) * ps.p[k];
    }
    Rational norm = inner(m, p, p);
    if (norm < 0) {
      throw DomainError("gram_schmidt: negative norm at degree " + std::to_string(n) +
                        "; not the moment sequence of a measure");
    }
    ps.p.push_back(std::move(p));
    ps.norms.push_back(std::move(norm));
  }
  return ps;
}

JacobiCoeffs jacobi_from_polys(const PolySeq& ps) {
  JacobiCoeffs out;
  for (std::size_t n = 1; n < ps.size(); ++n) {
    out.b.push_back(ps.norms[n - 1] == 0 ? Rational(0) : ps.norms[n] / ps.norms[n - 1]);
  }
  return out;
}

PolySeq polys_from_jacobi(const JacobiCoeffs& b, std::size_t K) {
  if (K > b.b.size()) {
    throw DomainError("polys_from_jacobi: degree " + std::to_string(K) + " needs " +
                      std::to_string(K) + " coefficients");
  }
  PolySeq ps;
  ps.p.push_back(Polynomial(Rational(1)));
  ps.norms.push_back(1);
  if (K == 0) return ps;
  ps.p.push_back(Polynomial::x());
  ps.norms.push_back(b.b[0]);
  for (std::size_t n = 1; n < K; ++n) {
    ps.p.push_back(Polynomial::x() * ps.p[n] - b.b[n - 1] * ps.p[n - 1]);
    ps.norms.push_back(ps.norms[n] * b.b[n]);
  }
  return ps;
}

Rational q_integer(std::size_t n, const Rational& q) {
  Rational acc = 0;
  Rational power = 1;
  for (std::size_t k = 0; k < n; ++k) {
    acc += power;
    power *= q;
  }
  return acc;
}

Rational q_factorial(std::size_t n, const Rational& q) {
  Rational acc = 1;
  for (std::size_t k = 1; k <= n; ++k) acc *= q_integer(k, q);
  return acc;
}

QHermite q_hermite(std::size_t K, const Rational& q) {
  if (q < -1 || q > 1) throw DomainError("q_hermite: need -1 <= q <= 1");
  QHermite out;
  for (std::size_t n = 1; n <= K; ++n) out.jacobi.b.push_back(q_integer(n, q));
  out.polys = polys_from_jacobi(out.jacobi, K);
  return out;
}

MomentSeq moments_from_jacobi(const JacobiCoeffs& b, std::size_t N) {
  if (N > 2 * b.b.size()) {
    throw DomainError("moments_from_jacobi: " + std::to_string(N) + " moments need " +
                      std::to_string((N + 1) / 2) + " coefficients");
  }
  // weight[h] = weighted number of paths from level 0 ending at level h.
  // Paths that return to 0 within N steps never rise above N / 2.
  const std::size_t top = N / 2;
  std::vector<Rational> weight(top + 1, Rational(0));
  weight[0] = 1;
  MomentSeq m;
  for (std::size_t step = 1; step <= N; ++step) {
    std::vector<Rational> next(top + 1, Rational(0));
    for (std::size_t h = 0; h <= top; ++h) {
      if (weight[h] == 0) continue;
      if (h < top) next[h + 1] += weight[h];
      if (h > 0) next[h - 1] += weight[h] * b.b[h - 1];
    }
    weight = std::move(next);
    m.values.push_back(weight[0]);
  }
  return m;
}

std::vector<std::vector<Rational>> mehler_matrix(const DiscreteMeasure& mu, const Rational& r) {
  const std::size_t s = mu.support_size();
  const PolySeq ps = gram_schmidt(mu.moments(2 * s), s);
  const auto& atoms = mu.atoms();
  std::vector<std::vector<Rational>> values(s);  // values[n][k] = p_n(x_k)
  for (std::size_t n = 0; n < s; ++n) {
    for (const Atom& a : atoms) values[n].push_back(ps.p[n](a.x));
  }
  std::vector<std::vector<Rational>> out(s, std::vector<Rational>(s, Rational(0)));
  Rational rn = 1;
  for (std::size_t n = 0; n < s; ++n, rn *= r) {
    if (ps.norms[n] == 0) continue;
    const Rational scale = rn / ps.norms[n];
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) out[i][j] += scale * values[n][i] * values[n][j];
    }
  }
  return out;
}

Rational mehler_eval(const DiscreteMeasure& mu, const Rational& r, const Rational& x,
                     const Rational& y) {
  const std::size_t s = mu.support_size();
  const PolySeq ps = gram_schmidt(mu.moments(2 * s), s);
  Rational acc = 0;
  Rational rn = 1;
  for (std::size_t n = 0; n < s; ++n, rn *= r) {
    if (ps.norms[n] == 0) continue;
    acc += rn * ps.p[n](x) * ps.p[n](y) / ps.norms[n];
  }
  return acc;
}

bool MarkovReport::markovian() const {
  return std::all_of(rows.begin(), rows.end(), [](const MarkovRow& row) { return row.markovian; });
}

MarkovReport markov_check(const DiscreteMeasure& mu, const std::vector<Rational>& r_grid) {
  const auto& atoms = mu.atoms();
  const std::size_t s = atoms.size();
  MarkovReport report;
  for (const Rational& r : r_grid) {
    const auto k = mehler_matrix(mu, r);
    MarkovRow row;
    row.r = r;
    row.min_value = k[0][0];
    row.positivity_preserving = true;
    row.trace_preserving = true;
    for (std::size_t i = 0; i < s; ++i) {
      Rational linf = 0;
      for (std::size_t j = 0; j < s; ++j) {
        row.min_value = std::min(row.min_value, k[i][j]);
        // (M 1_{y_j})(x_i) = k(x_i, y_j) w_j
        if (k[i][j] * atoms[j].w < 0) row.positivity_preserving = false;
        linf += abs(k[i][j]) * atoms[j].w;
      }
      row.linf_norm = std::max(row.linf_norm, linf);
    }
    for (std::size_t j = 0; j < s; ++j) {
      Rational l1 = 0;
      Rational mass = 0;
      for (std::size_t i = 0; i < s; ++i) {
        l1 += atoms[i].w * abs(k[i][j]);
        mass += atoms[i].w * k[i][j];
      }
      row.l1_norm = std::max(row.l1_norm, l1);
      if (mass != 1) row.trace_preserving = false;
    }
    row.markovian = row.min_value >= 0;
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::vector<Rational> expand_in_basis(const PolySeq& ps, const Polynomial& f) {
  if (f.is_zero()) return {};
  const auto deg = static_cast<std::size_t>(f.degree());
  if (deg >= ps.size()) {
    throw DomainError("expand_in_basis: degree " + std::to_string(deg) + " exceeds the basis");
  }
  std::vector<Rational> out(deg + 1, Rational(0));
  Polynomial rest = f;
  for (long k = static_cast<long>(deg); k >= 0; --k) {
    const auto kk = static_cast<std::size_t>(k);
    const Rational c = rest.coeff(kk);  // p_k is monic
    if (c == 0) continue;
    out[kk] = c;
    rest -= c * ps.p[kk];
  }
  return out;
}

Polynomial multiplier_apply(const PolySeq& ps, const Rational& r, const Polynomial& f) {
  const auto c = expand_in_basis(ps, f);
  Polynomial out;
  Rational rk = 1;
  for (std::size_t k = 0; k < c.size(); ++k, rk *= r) {
    if (c[k] != 0) out += (rk * c[k]) * ps.p[k];
  }
  return out;
}

std::vector<Rational> monomial_alpha(const PolySeq& ps, std::size_t n) {
  return expand_in_basis(ps, Polynomial::monomial(n));
}

MomentSeq semicircle_moments(std::size_t n) {
  MomentSeq m;
  for (std::size_t k = 1; k <= n; ++k) {
    m.values.push_back(k % 2 == 0 ? Rational(catalan(k / 2)) : Rational(0));
  }
  return m;
}

}  // namespace rdiag
