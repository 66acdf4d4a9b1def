#pragma once

#include "chowstab/polynomial.hpp"
#include "chowstab/rational.hpp"

#include <string>
#include <vector>

namespace chowstab {

/// Quotient of two Polynomials, always kept coprime with a monic
/// denominator. Equality is therefore plain structural comparison.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(int value) : num_(Rational(value)), den_(Rational(1)) {}
  RationalFunction(Rational value) : num_(std::move(value)), den_(Rational(1)) {}
  explicit RationalFunction(Polynomial numerator)
      : num_(std::move(numerator)), den_(Rational(1)) {}
  /// Normalizes numerator/denominator; throws on a zero denominator.
  RationalFunction(Polynomial numerator, Polynomial denominator);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);
  friend RationalFunction operator+(RationalFunction lhs, const RationalFunction& rhs) { return lhs += rhs; }
  friend RationalFunction operator-(RationalFunction lhs, const RationalFunction& rhs) { return lhs -= rhs; }
  friend RationalFunction operator*(RationalFunction lhs, const RationalFunction& rhs) { return lhs *= rhs; }
  friend RationalFunction operator/(RationalFunction lhs, const RationalFunction& rhs) { return lhs /= rhs; }
  bool operator==(const RationalFunction&) const = default;

  RationalFunction reciprocal() const;

  /// First `count` power-series coefficients at the origin; requires the
  /// denominator not to vanish there.
  std::vector<Rational> series_coefficients(std::size_t count) const;

  std::string to_string(const std::string& variable = "s") const;

 private:
  Polynomial num_;
  Polynomial den_;
};

/// Coprime/monic normalization of n/d (throws on d == 0).
inline RationalFunction ratfun_normalize(Polynomial n, Polynomial d) {
  return RationalFunction(std::move(n), std::move(d));
}

} // namespace chowstab
