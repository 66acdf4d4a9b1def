#include "chowstab/linear_form.hpp"

#include <sstream>
#include <stdexcept>

namespace chowstab {

bool LinearForm::is_zero() const {
  if (constant_ != 0) return false;
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

Rational LinearForm::evaluate(std::span<const Rational> values) const {
  if (values.size() != coeffs_.size())
    throw std::invalid_argument("linear form applied to a sample of wrong arity");
  Rational acc = constant_;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) acc += coeffs_[i] * values[i];
  return acc;
}

LinearForm LinearForm::operator-() const {
  LinearForm result = *this;
  for (auto& c : result.coeffs_) c = -c;
  result.constant_ = -result.constant_;
  return result;
}

LinearForm& LinearForm::operator+=(const LinearForm& rhs) {
  if (rhs.arity() != arity()) throw std::invalid_argument("linear form arity mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  constant_ += rhs.constant_;
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& rhs) { return *this += -rhs; }

LinearForm operator*(const Rational& scalar, const LinearForm& form) {
  LinearForm result = form;
  for (auto& c : result.coeffs_) c *= scalar;
  result.constant_ *= scalar;
  return result;
}

LinearForm LinearForm::composed_with(const std::vector<std::vector<Int>>& g) const {
  const std::size_t m = coeffs_.size();
  if (g.size() != m) throw std::invalid_argument("matrix size does not match form arity");
  std::vector<Rational> out(m, Rational(0));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k) {
      if (g[k].size() != m) throw std::invalid_argument("ragged matrix");
      out[j] += coeffs_[k] * Rational(g[k][j]);
    }
  return LinearForm(std::move(out), constant_);
}

std::string LinearForm::to_string(const std::vector<std::string>& labels) const {
  if (labels.size() != coeffs_.size())
    throw std::invalid_argument("label count does not match form arity");
  if (is_zero()) return "0";

  // Content = gcd of numerators / lcm of denominators over nonzero entries.
  Int num_gcd(0);
  Int den_lcm(1);
  auto absorb = [&](const Rational& value) {
    if (value == 0) return;
    num_gcd = gcd(num_gcd, abs(numerator(value)));
    den_lcm = lcm(den_lcm, denominator(value));
  };
  for (const auto& c : coeffs_) absorb(c);
  absorb(constant_);
  Rational content = make_rational(num_gcd, den_lcm);

  std::size_t term_count = (constant_ != 0) ? 1 : 0;
  for (const auto& c : coeffs_)
    if (c != 0) ++term_count;
  if (term_count <= 1) content = 1;

  std::ostringstream body;
  bool first = true;
  auto emit = [&](const Rational& raw, const std::string& label) {
    const Rational value = raw / content;
    if (value == 0) return;
    const Rational mag = abs(value);
    if (first) {
      if (value < 0) body << "-";
      first = false;
    } else {
      body << (value < 0 ? " - " : " + ");
    }
    const bool unit = (mag == 1);
    if (label.empty() || !unit) body << mag.str();
    if (!label.empty()) {
      if (!unit) body << "*";
      body << label;
    }
  };
  for (std::size_t i = 0; i < coeffs_.size(); ++i) emit(coeffs_[i], labels[i]);
  emit(constant_, "");

  if (content == 1) return body.str();
  return content.str() + "*(" + body.str() + ")";
}

} // namespace chowstab
