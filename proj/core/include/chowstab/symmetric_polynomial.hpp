#pragma once

#include "chowstab/rational.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace chowstab {

/// Invariant polynomial in Chern classes c_1, c_2, ... where c_i carries
/// weight i. Terms map exponent vectors (index i-1 holds the exponent of
/// c_i, trailing zeros trimmed) to nonzero rational coefficients; every
/// stored term has the same weighted degree.
class SymmetricPolynomial {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Rational>;

  SymmetricPolynomial() = default;
  SymmetricPolynomial(int degree, TermMap terms);

  int degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Product with c_1^power (raises the weighted degree by `power`).
  SymmetricPolynomial times_c1_power(int power) const;

  friend SymmetricPolynomial operator*(const Rational& scalar, const SymmetricPolynomial& poly);
  bool operator==(const SymmetricPolynomial&) const = default;

  /// Renders in c-notation, highest lexicographic monomial first,
  /// e.g. "1/12*c1^2 + 1/12*c2".
  std::string to_string() const;

 private:
  int degree_ = 0;
  TermMap terms_;
};

/// Degree-p Todd polynomial, generated from prod_i x_i / (1 - e^{-x_i})
/// and converted to the Chern (elementary-symmetric) basis through power
/// sums and Newton's identities. Independent of m as long as p <= m;
/// results are memoized.
SymmetricPolynomial todd_polynomial(int p, int m);

/// Td^p * c_1^{m-p+1}, the weighted-degree-(m+1) localization numerator.
SymmetricPolynomial integrand(int p, int m);

/// Substitutes c_i := i-th elementary symmetric value of the weights and
/// evaluates exactly. c_i vanishes for i beyond the tuple length.
Rational evaluate(const SymmetricPolynomial& poly, std::span<const Rational> weights);

/// Least common multiple of the coefficient denominators (the factor that
/// clears the polynomial to integer coefficients).
Int denominator_lcm(const SymmetricPolynomial& poly);

} // namespace chowstab
