#include "rdiag/strings.hpp"

#include <algorithm>
#include <cctype>

#include "rdiag/errors.hpp"

namespace rdiag {

StarString StarString::from_runs(std::vector<Run> runs) {
  StarString out;
  for (const Run& run : runs) {
    if (run.length == 0) continue;
    if (!out.runs_.empty() && out.runs_.back().symbol == run.symbol) {
      out.runs_.back().length += run.length;
    } else {
      out.runs_.push_back(run);
    }
  }
  return out;
}

StarString StarString::from_symbols(const std::vector<Symbol>& symbols) {
  std::vector<Run> runs;
  runs.reserve(symbols.size());
  for (Symbol s : symbols) runs.push_back({s, 1});
  return from_runs(std::move(runs));
}

StarString StarString::alternating(const std::vector<std::size_t>& ones,
                                   const std::vector<std::size_t>& stars) {
  if (ones.size() != stars.size()) {
    throw DomainError("alternating: need as many 1-runs as *-runs");
  }
  std::vector<Run> runs;
  for (std::size_t j = 0; j < ones.size(); ++j) {
    runs.push_back({Symbol::One, ones[j]});
    runs.push_back({Symbol::Star, stars[j]});
  }
  return from_runs(std::move(runs));
}

std::vector<Symbol> StarString::symbols() const {
  std::vector<Symbol> out;
  out.reserve(length());
  for (const Run& run : runs_) out.insert(out.end(), run.length, run.symbol);
  return out;
}

std::size_t StarString::length() const noexcept {
  std::size_t n = 0;
  for (const Run& run : runs_) n += run.length;
  return n;
}

std::size_t StarString::num_ones() const noexcept {
  std::size_t n = 0;
  for (const Run& run : runs_) {
    if (run.symbol == Symbol::One) n += run.length;
  }
  return n;
}

std::size_t StarString::num_stars() const noexcept { return length() - num_ones(); }

StarString StarString::operator+(const StarString& other) const {
  std::vector<Run> runs = runs_;
  runs.insert(runs.end(), other.runs_.begin(), other.runs_.end());
  return from_runs(std::move(runs));
}

StarString StarString::repeat(std::size_t times) const {
  std::vector<Run> runs;
  for (std::size_t t = 0; t < times; ++t) runs.insert(runs.end(), runs_.begin(), runs_.end());
  return from_runs(std::move(runs));
}

StarString StarString::swapped() const {
  StarString out = *this;
  for (Run& run : out.runs_) run.symbol = flip(run.symbol);
  return out;
}

long LatticePath::min_height() const { return *std::min_element(heights.begin(), heights.end()); }

long LatticePath::max_height() const { return *std::max_element(heights.begin(), heights.end()); }

StarString parse_string(std::string_view text) {
  std::vector<Run> runs;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Symbol symbol;
    if (c == '1') {
      symbol = Symbol::One;
    } else if (c == '*') {
      symbol = Symbol::Star;
    } else {
      throw ParseError(std::string("expected '1' or '*', found '") + c + "'", i);
    }
    ++i;
    std::size_t length = 1;
    if (i < text.size() && text[i] == '^') {
      const std::size_t exponent_at = ++i;
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > 1'000'000) throw ParseError("run length too large", exponent_at);
        ++i;
      }
      if (i == exponent_at) throw ParseError("expected run length after '^'", exponent_at);
      if (value == 0) throw ParseError("run length must be at least 1", exponent_at);
      length = value;
    }
    runs.push_back({symbol, length});
  }
  return StarString::from_runs(std::move(runs));
}

std::string format_string(const StarString& s) {
  std::string out;
  for (const Run& run : s.runs()) {
    if (!out.empty()) out += ' ';
    out += run.symbol == Symbol::One ? '1' : '*';
    if (run.length != 1) out += '^' + std::to_string(run.length);
  }
  return out;
}

bool is_balanced(const StarString& s) { return s.num_ones() == s.num_stars(); }

std::vector<Run> cyclic_blocks(const StarString& s) {
  std::vector<Run> blocks = s.runs();
  if (blocks.size() > 1 && blocks.front().symbol == blocks.back().symbol) {
    blocks.front().length += blocks.back().length;
    blocks.pop_back();
  }
  return blocks;
}

std::size_t num_runs(const StarString& s) {
  std::size_t ones = 0;
  std::size_t stars = 0;
  for (const Run& block : cyclic_blocks(s)) {
    (block.symbol == Symbol::One ? ones : stars) += 1;
  }
  return std::max(ones, stars);
}

StarString rotate(const StarString& s, long k) {
  const auto n = static_cast<long>(s.length());
  if (n == 0) return s;
  const long shift = ((k % n) + n) % n;
  std::vector<Symbol> sym = s.symbols();
  std::rotate(sym.begin(), sym.begin() + shift, sym.end());
  return StarString::from_symbols(sym);
}

std::size_t min_block_size(const StarString& s) {
  if (s.empty()) throw DomainError("min_block_size: empty string");
  std::size_t best = s.length();
  for (const Run& block : cyclic_blocks(s)) best = std::min(best, block.length);
  return best;
}

LatticePath lattice_path(const StarString& s) {
  LatticePath path;
  path.heights.reserve(s.length() + 1);
  long h = 0;
  path.heights.push_back(h);
  for (const Run& run : s.runs()) {
    const long step = run.symbol == Symbol::One ? 1 : -1;
    for (std::size_t k = 0; k < run.length; ++k) {
      h += step;
      path.heights.push_back(h);
    }
  }
  return path;
}

long path_height(const StarString& s) {
  const LatticePath path = lattice_path(s);
  return path.max_height() - path.min_height();
}

StarString rotate_min_first(const StarString& s) {
  if (!is_balanced(s)) throw DomainError("rotate_min_first: string is not balanced");
  if (s.empty()) return s;
  const std::size_t i = min_block_size(s);

  // Start offsets of the linear runs; a wrapped cyclic block starts at the last run.
  const auto& runs = s.runs();
  std::vector<std::size_t> starts(runs.size());
  for (std::size_t k = 1; k < runs.size(); ++k) starts[k] = starts[k - 1] + runs[k - 1].length;
  const bool wrapped = runs.size() > 1 && runs.front().symbol == runs.back().symbol;

  std::vector<StarString> candidates;
  for (std::size_t k = 0; k < runs.size(); ++k) {
    std::size_t block_len = runs[k].length;
    std::size_t start = starts[k];
    if (wrapped && k == 0) continue;  // counted with the final run
    if (wrapped && k + 1 == runs.size()) block_len += runs.front().length;
    if (block_len != i) continue;
    StarString rotated = rotate(s, static_cast<long>(start));
    if (runs[k].symbol == Symbol::Star) rotated = rotated.swapped();
    candidates.push_back(std::move(rotated));
  }
  for (const StarString& c : candidates) {
    if (lattice_path(c).min_height() >= 0) return c;
  }
  return candidates.front();
}

std::vector<std::vector<std::size_t>> weak_compositions(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  std::vector<std::size_t> parts(k, 0);
  // Lexicographic walk over parts[0..k-2]; the last part takes the remainder.
  auto recurse = [&](auto&& self, std::size_t pos, std::size_t remaining) -> void {
    if (pos + 1 == k) {
      parts[pos] = remaining;
      out.push_back(parts);
      return;
    }
    for (std::size_t v = 0; v <= remaining; ++v) {
      parts[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  recurse(recurse, 0, n);
  return out;
}

std::vector<StarString> enumerate_strings(std::size_t n, std::size_t r,
                                          std::optional<std::size_t> min_block) {
  std::vector<StarString> out;
  if (r == 0 || n < r) return out;
  if (min_block && (*min_block == 0 || n < *min_block * r)) return out;

  // Compositions into parts >= 1 are weak compositions of n - r shifted by one.
  auto comps = weak_compositions(n - r, r);
  for (auto& c : comps) {
    for (auto& part : c) ++part;
  }
  std::vector<std::vector<std::size_t>> keys;
  for (const auto& ones : comps) {
    for (const auto& stars : comps) {
      std::size_t smallest = n;
      std::vector<std::size_t> key;
      key.reserve(2 * r);
      for (std::size_t j = 0; j < r; ++j) {
        key.push_back(ones[j]);
        key.push_back(stars[j]);
        smallest = std::min({smallest, ones[j], stars[j]});
      }
      if (min_block && smallest != *min_block) continue;
      keys.push_back(std::move(key));
    }
  }
  std::sort(keys.begin(), keys.end());
  out.reserve(keys.size());
  for (const auto& key : keys) {
    std::vector<Run> runs;
    for (std::size_t j = 0; j < key.size(); ++j) {
      runs.push_back({j % 2 == 0 ? Symbol::One : Symbol::Star, key[j]});
    }
    out.push_back(StarString::from_runs(std::move(runs)));
  }
  return out;
}

std::vector<StarString> enumerate_balanced(std::size_t length) {
  std::vector<StarString> out;
  if (length % 2 != 0) return out;
  std::vector<Symbol> sym(length);
  auto recurse = [&](auto&& self, std::size_t pos, std::size_t ones, std::size_t stars) -> void {
    if (pos == length) {
      out.push_back(StarString::from_symbols(sym));
      return;
    }
    if (ones < length / 2) {
      sym[pos] = Symbol::One;
      self(self, pos + 1, ones + 1, stars);
    }
    if (stars < length / 2) {
      sym[pos] = Symbol::Star;
      self(self, pos + 1, ones, stars + 1);
    }
  };
  recurse(recurse, 0, 0, 0);
  return out;
}

}  // namespace rdiag
