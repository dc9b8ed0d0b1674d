#include "rdiag/polynomial.hpp"

#include <algorithm>

namespace rdiag {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) c_.push_back(constant);
}

Polynomial Polynomial::monomial(std::size_t degree, const Rational& coeff) {
  std::vector<Rational> c(degree + 1, Rational(0));
  c[degree] = coeff;
  return Polynomial(std::move(c));
}

Rational Polynomial::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::eval(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

Polynomial Polynomial::scale_argument(const Rational& s) const {
  Polynomial out = *this;
  Rational factor = 1;
  for (auto& c : out.c_) {
    c *= factor;
    factor *= s;
  }
  out.trim();
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::string to_string(const Polynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (long k = p.degree(); k >= 0; --k) {
    Rational c = p.coeff(static_cast<std::size_t>(k));
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = c == 1;
    if (!unit || k == 0) out += c.get_str();
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace rdiag
