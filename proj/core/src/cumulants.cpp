#include "rdiag/cumulants.hpp"

#include <set>

#include "rdiag/errors.hpp"
#include "rdiag/json_io.hpp"

namespace rdiag {

Rational MomentSeq::at(std::size_t k) const {
  if (k == 0) return 1;
  if (k > values.size()) {
    throw DomainError("moment m_" + std::to_string(k) + " requested from a sequence of length " +
                      std::to_string(values.size()));
  }
  return values[k - 1];
}

std::string to_string(SpecKind kind) {
  switch (kind) {
    case SpecKind::Circular:
      return "circular";
    case SpecKind::HaarUnitary:
      return "haar_unitary";
    case SpecKind::FromEvenMeasure:
      return "from_even_measure";
    case SpecKind::Custom:
      return "custom";
  }
  return "custom";
}

SpecKind parse_spec_kind(std::string_view text) {
  if (text == "circular") return SpecKind::Circular;
  if (text == "haar_unitary" || text == "haar") return SpecKind::HaarUnitary;
  if (text == "from_even_measure") return SpecKind::FromEvenMeasure;
  if (text == "custom") return SpecKind::Custom;
  throw ParseError("unknown cumulant spec kind '" + std::string(text) + "'", 0);
}

CumulantSpec CumulantSpec::circular(std::size_t n) {
  CumulantSpec spec{SpecKind::Circular, std::vector<Rational>(n, Rational(0))};
  if (n > 0) spec.d[0] = 1;
  return spec;
}

CumulantSpec CumulantSpec::haar_unitary(std::size_t n) {
  CumulantSpec spec{SpecKind::HaarUnitary, {}};
  for (std::size_t k = 1; k <= n; ++k) {
    Rational value(catalan(k - 1));
    if (k % 2 == 0) value = -value;
    spec.d.push_back(value);
  }
  return spec;
}

CumulantSpec CumulantSpec::custom(std::vector<Rational> d) {
  return CumulantSpec{SpecKind::Custom, std::move(d)};
}

namespace {

/// Coefficient of z^t in (sum_k m_k z^k)^s, using m_0..m_{limit}.
Rational power_coefficient(const std::vector<Rational>& m, std::size_t s, std::size_t t) {
  // poly holds coefficients 0..t of the running power.
  std::vector<Rational> poly(t + 1, Rational(0));
  poly[0] = 1;
  for (std::size_t factor = 0; factor < s; ++factor) {
    std::vector<Rational> next(t + 1, Rational(0));
    for (std::size_t a = 0; a <= t; ++a) {
      if (poly[a] == 0) continue;
      for (std::size_t b = 0; a + b <= t; ++b) {
        if (m[b] == 0) continue;
        next[a + b] += poly[a] * m[b];
      }
    }
    poly = std::move(next);
  }
  return poly[t];
}

}  // namespace

std::vector<Rational> moments_to_cumulants(const MomentSeq& m) {
  const std::size_t n_max = m.size();
  std::vector<Rational> full(n_max + 1);
  full[0] = 1;
  for (std::size_t k = 1; k <= n_max; ++k) full[k] = m.values[k - 1];
  std::vector<Rational> kappa(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    Rational rest = 0;
    for (std::size_t s = 1; s < n; ++s) {
      if (kappa[s - 1] == 0) continue;
      rest += kappa[s - 1] * power_coefficient(full, s, n - s);
    }
    kappa[n - 1] = full[n] - rest;
  }
  return kappa;
}

MomentSeq cumulants_to_moments(const std::vector<Rational>& kappa) {
  const std::size_t n_max = kappa.size();
  std::vector<Rational> full(n_max + 1, Rational(0));
  full[0] = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    Rational total = 0;
    for (std::size_t s = 1; s <= n; ++s) {
      if (kappa[s - 1] == 0) continue;
      total += kappa[s - 1] * power_coefficient(full, s, n - s);
    }
    full[n] = total;
  }
  return MomentSeq{std::vector<Rational>(full.begin() + 1, full.end())};
}

Rational phi_pi(const MomentSeq& m, const SetPartition& p) {
  Rational out = 1;
  for (const auto& block : p.blocks()) out *= m.at(block.size());
  return out;
}

Rational kappa_pi(const std::vector<Rational>& kappa, const SetPartition& p) {
  Rational out = 1;
  for (const auto& block : p.blocks()) {
    if (block.size() > kappa.size()) {
      throw DomainError("kappa_pi: block of size " + std::to_string(block.size()) +
                        " exceeds the cumulant sequence");
    }
    out *= kappa[block.size() - 1];
  }
  return out;
}

namespace {

void require_length(const CumulantSpec& spec, std::size_t half, const char* who) {
  if (spec.d.size() < half) {
    throw DomainError(std::string(who) + ": cumulant spec has " + std::to_string(spec.d.size()) +
                      " entries, blocks of half-size " + std::to_string(half) + " are possible");
  }
}

}  // namespace

Rational rdiag_moment(const CumulantSpec& spec, const StarString& s) {
  if (!is_balanced(s)) return 0;
  require_length(spec, s.length() / 2, "rdiag_moment");
  const auto sym = s.symbols();
  const std::vector<std::size_t> labels(sym.size(), 0);
  return alternating_partition_sum<Rational>(
      sym, labels, [&](std::size_t, std::size_t half) { return spec.d[half - 1]; });
}

Rational rdiag_moment_enumerated(const CumulantSpec& spec, const StarString& s) {
  const auto partitions = enumerate_nc_alternating(s);
  if (partitions.empty()) return 0;
  require_length(spec, s.length() / 2, "rdiag_moment_enumerated");
  Rational total = 0;
  for (const auto& p : partitions) {
    Rational term = 1;
    for (const auto& block : p.blocks()) term *= spec.d[block.size() / 2 - 1];
    total += term;
  }
  return total;
}

Rational rdiag_norm(const CumulantSpec& spec, std::size_t n) {
  if (n == 0) return 1;
  require_length(spec, 1, "rdiag_norm");
  return pow(spec.d[0], n);
}

Rational mixed_moment(const std::map<std::size_t, CumulantSpec>& specs, const GeneratorWord& w) {
  std::map<std::size_t, long> balance;
  for (const Letter& l : w.letters) balance[l.generator] += l.adjoint ? -1 : 1;
  for (const auto& [j, b] : balance) {
    if (!specs.contains(j)) {
      throw DomainError("mixed_moment: no cumulant spec for generator a" + std::to_string(j));
    }
    if (b != 0) return 0;
  }
  std::map<std::size_t, std::size_t> letters_of;
  for (const Letter& l : w.letters) ++letters_of[l.generator];
  for (const auto& [j, count] : letters_of) require_length(specs.at(j), count / 2, "mixed_moment");

  std::vector<Symbol> sym;
  std::vector<std::size_t> labels;
  for (const Letter& l : w.letters) {
    sym.push_back(l.adjoint ? Symbol::Star : Symbol::One);
    labels.push_back(l.generator);
  }
  return alternating_partition_sum<Rational>(
      sym, labels, [&](std::size_t j, std::size_t half) { return specs.at(j).d[half - 1]; });
}

CumulantSpec from_even_measure(const MomentSeq& m) {
  for (std::size_t k = 1; k <= m.size(); k += 2) {
    if (m.at(k) != 0) {
      throw DomainError("from_even_measure: odd moment m_" + std::to_string(k) +
                        " is nonzero; the measure is not symmetric");
    }
  }
  if (m.size() < 2 || m.at(2) <= 0) {
    throw DomainError("from_even_measure: need a positive second moment");
  }
  const Rational m2 = m.at(2);
  MomentSeq scaled = m;
  for (std::size_t k = 2; k <= m.size(); k += 2) scaled.values[k - 1] /= pow(m2, k / 2);

  const auto kappa = moments_to_cumulants(scaled);
  CumulantSpec spec{SpecKind::FromEvenMeasure, {}};
  for (std::size_t n = 1; 2 * n <= kappa.size(); ++n) spec.d.push_back(kappa[2 * n - 1]);
  return spec;
}

Rational fourth_moment(const CumulantSpec& spec) {
  return rdiag_moment(spec, StarString::alternating({1, 1}, {1, 1}));
}

Rational v_stat(const CumulantSpec& spec) { return fourth_moment(spec) - 1; }

bool kappa4_identity_holds(const CumulantSpec& spec) {
  require_length(spec, 2, "kappa4_identity_holds");
  return spec.d[0] == 1 && spec.d[1] == fourth_moment(spec) - 2;
}

std::string spec_to_json(const CumulantSpec& spec) {
  Json j = Json::object();
  j["kind"] = to_string(spec.kind);
  Json d = Json::array();
  for (const auto& v : spec.d) d.push_back(to_string(v));
  j["d"] = std::move(d);
  return dump(j);
}

CumulantSpec spec_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("d") || !j["d"].is_array()) {
    throw ParseError("cumulant spec JSON needs an array field 'd'", 0);
  }
  CumulantSpec spec;
  spec.kind = j.contains("kind") ? parse_spec_kind(j["kind"].get<std::string>()) : SpecKind::Custom;
  for (const auto& item : j["d"]) {
    if (!item.is_string()) throw ParseError("cumulant entries must be \"p/q\" strings", 0);
    spec.d.push_back(parse_rational(item.get<std::string>()));
  }
  return spec;
}

}  // namespace rdiag
