#include "chowstab/rational_function.hpp"

#include <stdexcept>

namespace chowstab {

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw std::domain_error("division by zero polynomial");
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  const Polynomial common = poly_gcd(num_, den_);
  if (common.degree() > 0) {
    num_ = Polynomial::divmod(num_, common).first;
    den_ = Polynomial::divmod(den_, common).first;
  }
  const Rational lead = den_.leading();
  if (lead != 1) {
    const Rational inv = Rational(1) / lead;
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction result = *this;
  result.num_ = -result.num_;
  return result;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  // lcm-based addition keeps degrees down when denominators share factors,
  // the common case in series work where they are powers of one polynomial.
  const Polynomial g = poly_gcd(den_, rhs.den_);
  if (g.degree() <= 0)
    return *this = RationalFunction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  const Polynomial left = Polynomial::divmod(den_, g).first;
  const Polynomial right = Polynomial::divmod(rhs.den_, g).first;
  return *this = RationalFunction(num_ * right + rhs.num_ * left, den_ * right);
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
  return *this += -rhs;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  // Rational scalars scale the numerator without disturbing coprimality.
  if (rhs.den_.degree() == 0 && rhs.num_.degree() <= 0) {
    num_ = (rhs.num_.coefficient(0) / rhs.den_.coefficient(0)) * num_;
    if (num_.is_zero()) den_ = Polynomial(Rational(1));
    return *this;
  }
  if (den_.degree() == 0 && num_.degree() <= 0) {
    const Rational scalar = num_.coefficient(0) / den_.coefficient(0);
    *this = rhs;
    num_ = scalar * num_;
    if (num_.is_zero()) den_ = Polynomial(Rational(1));
    return *this;
  }
  // Cross-cancel before multiplying to keep intermediate degrees small.
  const Polynomial g1 = poly_gcd(num_, rhs.den_);
  const Polynomial g2 = poly_gcd(rhs.num_, den_);
  Polynomial n1 = g1.degree() > 0 ? Polynomial::divmod(num_, g1).first : num_;
  Polynomial d2 = g1.degree() > 0 ? Polynomial::divmod(rhs.den_, g1).first : rhs.den_;
  Polynomial n2 = g2.degree() > 0 ? Polynomial::divmod(rhs.num_, g2).first : rhs.num_;
  Polynomial d1 = g2.degree() > 0 ? Polynomial::divmod(den_, g2).first : den_;
  return *this = RationalFunction(n1 * n2, d1 * d2);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  return *this *= rhs.reciprocal();
}

RationalFunction RationalFunction::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero rational function");
  return RationalFunction(den_, num_);
}

std::vector<Rational> RationalFunction::series_coefficients(std::size_t count) const {
  const Rational d0 = den_.coefficient(0);
  if (d0 == 0) throw std::domain_error("rational function has a pole at the origin");
  // c_k from num_k = sum_{i<=k} den_i * c_{k-i}.
  std::vector<Rational> out(count, Rational(0));
  for (std::size_t k = 0; k < count; ++k) {
    Rational acc = num_.coefficient(k);
    for (std::size_t i = 1; i <= k; ++i) acc -= den_.coefficient(i) * out[k - i];
    out[k] = acc / d0;
  }
  return out;
}

std::string RationalFunction::to_string(const std::string& variable) const {
  if (den_ == Polynomial(Rational(1))) return num_.to_string(variable);
  std::string n = num_.to_string(variable);
  if (num_.degree() > 0) n = "(" + n + ")";
  return n + "/(" + den_.to_string(variable) + ")";
}

} // namespace chowstab
