#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rdiag/rational.hpp"

namespace rdiag {

/// Dense univariate polynomial with exact rational coefficients, lowest degree
/// first. Trailing zeros are always trimmed, so the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(const Rational& constant);  // NOLINT: implicit scalar promotion is intended

  static Polynomial monomial(std::size_t degree, const Rational& coeff = 1);
  static Polynomial x() { return monomial(1); }

  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// Coefficient of x^k (zero past the degree).
  Rational coeff(std::size_t k) const;
  const std::vector<Rational>& coeffs() const noexcept { return c_; }

  Rational operator()(const Rational& x) const;
  double eval(double x) const;

  /// p(s * x).
  Polynomial scale_argument(const Rational& s) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Human-readable form such as `q^6 - 1/2*q^4 + 3`; zero prints as `0`.
std::string to_string(const Polynomial& p, const std::string& var = "x");

}  // namespace rdiag
