#include "rdiag/words.hpp"

#include <algorithm>
#include <cctype>

#include "rdiag/errors.hpp"

namespace rdiag {

StarString GeneratorWord::pattern() const {
  std::vector<Symbol> sym;
  sym.reserve(letters.size());
  for (const Letter& l : letters) sym.push_back(l.adjoint ? Symbol::Star : Symbol::One);
  return StarString::from_symbols(sym);
}

std::size_t GeneratorWord::max_generator() const noexcept {
  std::size_t m = 0;
  for (const Letter& l : letters) m = std::max(m, l.generator);
  return m;
}

namespace {

std::size_t read_number(std::string_view text, std::size_t& i, const char* what) {
  const std::size_t start = i;
  std::size_t value = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    value = value * 10 + static_cast<std::size_t>(text[i] - '0');
    if (value > 1'000'000) throw ParseError(std::string(what) + " too large", start);
    ++i;
  }
  if (i == start) throw ParseError(std::string("expected ") + what, start);
  return value;
}

}  // namespace

GeneratorWord parse_word(std::string_view text) {
  GeneratorWord w;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (i < text.size() && text[i] == '1') {
    ++i;
    skip_space();
    if (i != text.size()) throw ParseError("unexpected text after empty word '1'", i);
    return w;
  }
  while (i < text.size()) {
    if (text[i] != 'a') throw ParseError(std::string("expected 'a', found '") + text[i] + "'", i);
    ++i;
    const std::size_t at = i;
    const std::size_t j = read_number(text, i, "generator index");
    if (j == 0) throw ParseError("generator index must be at least 1", at);
    bool adjoint = false;
    if (i < text.size() && text[i] == '*') {
      adjoint = true;
      ++i;
    }
    std::size_t repeat = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      const std::size_t rat = i;
      repeat = read_number(text, i, "repeat count");
      if (repeat == 0) throw ParseError("repeat count must be at least 1", rat);
    }
    w.letters.insert(w.letters.end(), repeat, Letter{j, adjoint});
    skip_space();
  }
  return w;
}

std::string format_word(const GeneratorWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += 'a' + std::to_string(l.generator);
    if (l.adjoint) out += '*';
  }
  return out;
}

GeneratorWord power(std::size_t generator, std::size_t n, bool adjoint) {
  GeneratorWord w;
  w.letters.assign(n, Letter{generator, adjoint});
  return w;
}

GeneratorWord operator*(const GeneratorWord& a, const GeneratorWord& b) {
  GeneratorWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

std::vector<GeneratorWord> enumerate_words(std::size_t length, std::size_t generators) {
  std::vector<GeneratorWord> out{GeneratorWord{}};
  for (std::size_t pos = 0; pos < length; ++pos) {
    std::vector<GeneratorWord> next;
    next.reserve(out.size() * 2 * generators);
    for (const auto& w : out) {
      for (std::size_t j = 1; j <= generators; ++j) {
        for (bool adj : {false, true}) {
          GeneratorWord e = w;
          e.letters.push_back(Letter{j, adj});
          next.push_back(std::move(e));
        }
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace rdiag
