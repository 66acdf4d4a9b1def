#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chowstab {

/// Truncated Laurent series over an abstract coefficient field.
///
/// A series stores `window()` consecutive coefficients starting at order
/// `lowest_order()`. Every order below the window is exactly zero; every
/// order above it is unknown. Arithmetic propagates the window
/// conservatively and never fabricates coefficients beyond what both
/// operands justify:
///   - product window   = min of the operand windows,
///   - sum window       = (min of the top known orders) - (min of the
///                        lowest orders) + 1,
///   - inverse window   = the operand window, with the order negated.
///
/// The field type needs value semantics, construction from int, the four
/// ring/field operators and equality. Used with Rational for expansions in
/// t and with RationalFunction for the Brion expansion in a formal chart
/// variable whose coefficients live in Q(s).
template <class Field>
class LaurentSeries {
 public:
  LaurentSeries(long lowest_order, std::vector<Field> coefficients)
      : low_(lowest_order), coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) throw std::invalid_argument("series window must be positive");
  }

  static LaurentSeries zero(long lowest_order, std::size_t window) {
    return LaurentSeries(lowest_order, std::vector<Field>(window, Field(0)));
  }
  static LaurentSeries constant(Field value, std::size_t window) {
    std::vector<Field> coeffs(window, Field(0));
    coeffs[0] = std::move(value);
    return LaurentSeries(0, std::move(coeffs));
  }

  long lowest_order() const { return low_; }
  long highest_order() const { return low_ + static_cast<long>(coeffs_.size()) - 1; }
  std::size_t window() const { return coeffs_.size(); }

  const Field& coefficient(long order) const {
    if (order < low_ || order > highest_order())
      throw std::out_of_range("series coefficient outside the stored window");
    return coeffs_[static_cast<std::size_t>(order - low_)];
  }

  /// True when every stored coefficient is zero.
  bool stored_is_zero() const {
    for (const auto& c : coeffs_)
      if (!(c == Field(0))) return false;
    return true;
  }

  /// Drops stored leading zeros (they carry their information into the
  /// raised lowest_order). An all-zero series is returned unchanged.
  LaurentSeries normalized() const {
    std::size_t skip = 0;
    while (skip < coeffs_.size() && coeffs_[skip] == Field(0)) ++skip;
    if (skip == 0 || skip == coeffs_.size()) return *this;
    return LaurentSeries(low_ + static_cast<long>(skip),
                         std::vector<Field>(coeffs_.begin() + skip, coeffs_.end()));
  }

  LaurentSeries shifted(long delta) const {
    LaurentSeries result = *this;
    result.low_ += delta;
    return result;
  }

  LaurentSeries operator-() const {
    LaurentSeries result = *this;
    for (auto& c : result.coeffs_) c = Field(0) - c;
    return result;
  }

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    const long low = std::min(a.low_, b.low_);
    const long top = std::min(a.highest_order(), b.highest_order());
    if (top < low) throw std::invalid_argument("series windows do not overlap");
    std::vector<Field> out;
    out.reserve(static_cast<std::size_t>(top - low + 1));
    for (long k = low; k <= top; ++k) {
      Field value(0);
      if (k >= a.low_ && k <= a.highest_order()) value = value + a.coefficient(k);
      if (k >= b.low_ && k <= b.highest_order()) value = value + b.coefficient(k);
      out.push_back(std::move(value));
    }
    return LaurentSeries(low, std::move(out));
  }

  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
    return a + (-b);
  }

  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    const std::size_t window = std::min(a.window(), b.window());
    std::vector<Field> out(window, Field(0));
    for (std::size_t i = 0; i < a.window(); ++i) {
      if (a.coeffs_[i] == Field(0)) continue;
      for (std::size_t j = 0; i + j < window && j < b.window(); ++j)
        out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return LaurentSeries(a.low_ + b.low_, std::move(out));
  }

  friend LaurentSeries operator*(const Field& scalar, const LaurentSeries& series) {
    LaurentSeries result = series;
    for (auto& c : result.coeffs_) c = scalar * c;
    return result;
  }

  /// Multiplicative inverse within the window; requires the coefficient at
  /// lowest_order to be invertible.
  LaurentSeries inverse() const {
    if (coeffs_[0] == Field(0))
      throw std::domain_error("series not invertible at stored order");
    std::vector<Field> out(coeffs_.size(), Field(0));
    out[0] = Field(1) / coeffs_[0];
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
      Field acc(0);
      for (std::size_t i = 1; i <= k; ++i) acc = acc + coeffs_[i] * out[k - i];
      out[k] = (Field(0) - acc) / coeffs_[0];
    }
    return LaurentSeries(-low_, std::move(out));
  }

  template <class Target, class Fn>
  LaurentSeries<Target> map(Fn&& fn) const {
    std::vector<Target> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(fn(c));
    return LaurentSeries<Target>(low_, std::move(out));
  }

  bool operator==(const LaurentSeries&) const = default;

 private:
  long low_;
  std::vector<Field> coeffs_;
};

/// exp(rate * eps) truncated to the requested window (orders 0..window-1).
template <class Field>
LaurentSeries<Field> exp_series(const Field& rate, std::size_t window) {
  std::vector<Field> coeffs(window, Field(0));
  Field term(1);
  coeffs[0] = term;
  for (std::size_t k = 1; k < window; ++k) {
    term = term * rate / Field(static_cast<int>(k));
    coeffs[k] = term;
  }
  return LaurentSeries<Field>(0, std::move(coeffs));
}

/// 1 - exp(rate * eps) with the zero constant term trimmed, i.e. stored
/// orders 1..window.
template <class Field>
LaurentSeries<Field> one_minus_exp(const Field& rate, std::size_t window) {
  std::vector<Field> coeffs(window, Field(0));
  Field term(1);
  for (std::size_t k = 0; k < window; ++k) {
    term = term * rate / Field(static_cast<int>(k + 1));
    coeffs[k] = Field(0) - term;
  }
  return LaurentSeries<Field>(1, std::move(coeffs));
}

} // namespace chowstab
