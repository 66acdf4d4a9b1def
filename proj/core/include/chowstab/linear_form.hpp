#pragma once

#include "chowstab/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace chowstab {

/// Exact affine-linear functional in a fixed number of torus parameters.
/// All invariant computations produce homogeneous forms (zero constant);
/// the constant term exists so that interpolation can verify that fact
/// instead of assuming it.
class LinearForm {
 public:
  explicit LinearForm(std::size_t arity) : coeffs_(arity, Rational(0)) {}
  explicit LinearForm(std::vector<Rational> coefficients, Rational constant = Rational(0))
      : coeffs_(std::move(coefficients)), constant_(std::move(constant)) {}

  std::size_t arity() const { return coeffs_.size(); }
  const Rational& coefficient(std::size_t index) const { return coeffs_.at(index); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& constant() const { return constant_; }

  bool is_zero() const;
  bool is_homogeneous() const { return constant_ == 0; }

  Rational evaluate(std::span<const Rational> values) const;

  LinearForm operator-() const;
  LinearForm& operator+=(const LinearForm& rhs);
  LinearForm& operator-=(const LinearForm& rhs);
  friend LinearForm operator+(LinearForm lhs, const LinearForm& rhs) { return lhs += rhs; }
  friend LinearForm operator-(LinearForm lhs, const LinearForm& rhs) { return lhs -= rhs; }
  friend LinearForm operator*(const Rational& scalar, const LinearForm& form);
  bool operator==(const LinearForm&) const = default;

  /// The form xi -> this(g * xi) for an integer matrix g acting on the
  /// parameter space (coefficients transform by g transpose).
  LinearForm composed_with(const std::vector<std::vector<Int>>& g) const;

  /// Human-readable rendering with the given parameter labels; the common
  /// rational content is factored out, e.g. "13056*(a1 + a2 - 2*c)".
  std::string to_string(const std::vector<std::string>& labels) const;

 private:
  std::vector<Rational> coeffs_;
  Rational constant_{0};
};

} // namespace chowstab
