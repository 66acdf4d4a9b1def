#include "chowstab/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace chowstab {

Polynomial::Polynomial(Rational constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::variable() { return monomial(1, Rational(1)); }

Polynomial Polynomial::monomial(std::size_t degree, Rational coefficient) {
  if (coefficient == 0) return {};
  Polynomial result;
  result.coeffs_.assign(degree + 1, Rational(0));
  result.coeffs_[degree] = std::move(coefficient);
  return result;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& Polynomial::leading() const {
  if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::coefficient(std::size_t degree) const {
  return degree < coeffs_.size() ? coeffs_[degree] : Rational(0);
}

Rational Polynomial::evaluate(const Rational& point) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * point + *it;
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw std::domain_error("monic form of zero polynomial");
  return Rational(1) / leading() * *this;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(Rational(1));
  Polynomial base = *this;
  for (; exponent != 0; exponent >>= 1) {
    if (exponent & 1u) result *= base;
    if (exponent > 1) base *= base;
  }
  return result;
}

Polynomial Polynomial::operator-() const {
  Polynomial result = *this;
  for (auto& c : result.coeffs_) c = -c;
  return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& scalar, const Polynomial& poly) {
  if (scalar == 0) return {};
  Polynomial result = poly;
  for (auto& c : result.coeffs_) c *= scalar;
  return result;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& dividend,
                                                     const Polynomial& divisor) {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  Polynomial remainder = dividend;
  std::vector<Rational> quotient;
  const long shift = divisor.degree();
  if (remainder.degree() >= shift)
    quotient.assign(static_cast<std::size_t>(remainder.degree() - shift) + 1, Rational(0));
  while (!remainder.is_zero() && remainder.degree() >= shift) {
    const long d = remainder.degree() - shift;
    const Rational factor = remainder.leading() / divisor.leading();
    quotient[static_cast<std::size_t>(d)] = factor;
    remainder -= factor * monomial(static_cast<std::size_t>(d), Rational(1)) * divisor;
  }
  return {Polynomial(std::move(quotient)), std::move(remainder)};
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  // Nonzero constants are units, so any constant operand short-circuits to 1.
  if (!a.is_zero() && a.degree() == 0) return Polynomial(Rational(1));
  if (!b.is_zero() && b.degree() == 0) return Polynomial(Rational(1));
  Polynomial first = a;
  Polynomial second = b;
  while (!second.is_zero()) {
    Polynomial rem = Polynomial::divmod(first, second).second;
    first = std::move(second);
    // Keeping remainders monic bounds coefficient growth along the chain.
    second = rem.is_zero() ? Polynomial{} : rem.monic();
  }
  return first.is_zero() ? first : first.monic();
}

std::string Polynomial::to_string(const std::string& variable) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const bool unit = (mag == 1);
    if (i == 0 || !unit) out << mag.str();
    if (i > 0) {
      if (!unit) out << "*";
      out << variable;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

} // namespace chowstab
