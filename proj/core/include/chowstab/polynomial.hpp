#pragma once

#include "chowstab/rational.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace chowstab {

/// Dense univariate polynomial over Rational.
///
/// Coefficients are stored by ascending degree with no trailing zeros; the
/// zero polynomial stores nothing and reports degree() == -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Rational constant);
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial variable();
  static Polynomial monomial(std::size_t degree, Rational coefficient);

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const Rational& leading() const;
  Rational coefficient(std::size_t degree) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational evaluate(const Rational& point) const;
  Polynomial monic() const;
  Polynomial pow(unsigned exponent) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(const Rational& scalar, const Polynomial& poly);
  bool operator==(const Polynomial&) const = default;

  /// Euclidean division; returns {quotient, remainder} with
  /// deg(remainder) < deg(divisor). Throws on division by zero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& dividend,
                                                  const Polynomial& divisor);

  std::string to_string(const std::string& variable = "s") const;

 private:
  std::vector<Rational> coeffs_;
  void trim();
};

/// Monic greatest common divisor; poly_gcd(0, 0) == 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

} // namespace chowstab
