#include "rdiag/rational.hpp"

#include <cctype>

#include "rdiag/errors.hpp"

namespace rdiag {

namespace {

BigInt parse_integer(std::string_view text, std::size_t base_offset) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw ParseError("expected digits", base_offset + i);
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw ParseError("unexpected character in integer", base_offset + k);
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return BigInt(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, 0));
  BigInt num = parse_integer(text.substr(0, slash), 0);
  BigInt den = parse_integer(text.substr(slash + 1), slash + 1);
  if (den == 0) throw ParseError("zero denominator", slash + 1);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const BigInt& value) { return value.get_str(); }

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt catalan(unsigned long n) { return binomial(2 * n, n) / (n + 1); }

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Rational pow(const Rational& value, unsigned long exponent) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), value.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), value.get_den_mpz_t(), exponent);
  out.canonicalize();
  return out;
}

}  // namespace rdiag
