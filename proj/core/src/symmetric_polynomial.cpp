#include "chowstab/symmetric_polynomial.hpp"

#include "chowstab/laurent_series.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace chowstab {

namespace {

using Exponents = SymmetricPolynomial::Exponents;
using TermMap = SymmetricPolynomial::TermMap;

int weighted_degree(const Exponents& exponents) {
  int degree = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    degree += static_cast<int>(i + 1) * exponents[i];
  return degree;
}

void trim(Exponents& exponents) {
  while (!exponents.empty() && exponents.back() == 0) exponents.pop_back();
}

void add_term(TermMap& map, Exponents key, const Rational& value) {
  if (value == 0) return;
  trim(key);
  auto [it, inserted] = map.emplace(std::move(key), value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) map.erase(it);
  }
}

// Product of possibly inhomogeneous term maps, truncated above max_degree.
TermMap multiply(const TermMap& a, const TermMap& b, int max_degree) {
  TermMap out;
  for (const auto& [ka, va] : a) {
    const int da = weighted_degree(ka);
    for (const auto& [kb, vb] : b) {
      if (da + weighted_degree(kb) > max_degree) continue;
      Exponents key(std::max(ka.size(), kb.size()), 0);
      for (std::size_t i = 0; i < ka.size(); ++i) key[i] += ka[i];
      for (std::size_t i = 0; i < kb.size(); ++i) key[i] += kb[i];
      add_term(out, std::move(key), va * vb);
    }
  }
  return out;
}

void accumulate(TermMap& into, const TermMap& from, const Rational& scale) {
  for (const auto& [key, value] : from) add_term(into, key, scale * value);
}

// log of a power series with constant term 1, truncated to the window.
LaurentSeries<Rational> series_log(const LaurentSeries<Rational>& series) {
  const std::size_t window = series.window();
  std::vector<Rational> shifted = {Rational(0)};
  for (long k = 1; k < static_cast<long>(window); ++k)
    shifted.push_back(series.coefficient(k));
  const LaurentSeries<Rational> v(0, shifted); // series - 1, stored from order 0
  LaurentSeries<Rational> result = LaurentSeries<Rational>::zero(0, window);
  LaurentSeries<Rational> power = LaurentSeries<Rational>::constant(Rational(1), window);
  Rational sign(1);
  for (std::size_t k = 1; k < window; ++k) {
    power = power * v;
    result = result + (sign / Rational(static_cast<int>(k))) * power;
    sign = -sign;
  }
  return result;
}

// Power sums in the Chern basis: p_1..p_degree via Newton's identities.
std::vector<TermMap> power_sums_in_chern_basis(int degree) {
  std::vector<TermMap> p(static_cast<std::size_t>(degree) + 1);
  for (int k = 1; k <= degree; ++k) {
    TermMap acc;
    for (int i = 1; i < k; ++i) {
      Exponents e_i(static_cast<std::size_t>(i), 0);
      e_i.back() = 1;
      TermMap factor;
      factor.emplace(std::move(e_i), (i % 2 == 1) ? Rational(1) : Rational(-1));
      accumulate(acc, multiply(factor, p[static_cast<std::size_t>(k - i)], degree), Rational(1));
    }
    Exponents e_k(static_cast<std::size_t>(k), 0);
    e_k.back() = 1;
    add_term(acc, std::move(e_k), (k % 2 == 1) ? Rational(k) : Rational(-k));
    p[static_cast<std::size_t>(k)] = std::move(acc);
  }
  return p;
}

// Graded pieces of exp(sum_j L_j p_j) up to the requested degree, where
// L_j are the coefficients of log(x / (1 - e^{-x})).
std::vector<SymmetricPolynomial> compute_todd_slices(int degree) {
  const std::size_t window = static_cast<std::size_t>(degree) + 1;

  // (1 - e^{-x}) / x = sum_k (-x)^k / (k+1)!
  std::vector<Rational> inv_coeffs(window);
  Rational factorial(1);
  Rational sign(1);
  for (std::size_t k = 0; k < window; ++k) {
    factorial *= Rational(static_cast<int>(k) + 1);
    inv_coeffs[k] = sign / factorial;
    sign = -sign;
  }
  const LaurentSeries<Rational> todd_series =
      LaurentSeries<Rational>(0, std::move(inv_coeffs)).inverse();
  const LaurentSeries<Rational> log_todd = series_log(todd_series);

  const std::vector<TermMap> power_sums = power_sums_in_chern_basis(degree);
  TermMap exponent_map;
  for (int j = 1; j <= degree; ++j)
    accumulate(exponent_map, power_sums[static_cast<std::size_t>(j)], log_todd.coefficient(j));

  TermMap total;
  add_term(total, {}, Rational(1));
  TermMap power;
  power.emplace(Exponents{}, Rational(1));
  Rational inv_factorial(1);
  for (int k = 1; k <= degree; ++k) {
    power = multiply(power, exponent_map, degree);
    inv_factorial /= Rational(k);
    accumulate(total, power, inv_factorial);
  }

  std::vector<TermMap> slices(static_cast<std::size_t>(degree) + 1);
  for (const auto& [key, value] : total)
    slices[static_cast<std::size_t>(weighted_degree(key))].emplace(key, value);

  std::vector<SymmetricPolynomial> out;
  out.reserve(slices.size());
  for (int d = 0; d <= degree; ++d)
    out.emplace_back(d, std::move(slices[static_cast<std::size_t>(d)]));
  return out;
}

std::mutex todd_cache_mutex;
std::vector<SymmetricPolynomial> todd_cache; // index p, filled up to the largest degree seen

} // namespace

SymmetricPolynomial::SymmetricPolynomial(int degree, TermMap terms)
    : degree_(degree), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0) {
      it = terms_.erase(it);
      continue;
    }
    if (weighted_degree(it->first) != degree_)
      throw std::invalid_argument("symmetric polynomial term of wrong weighted degree");
    ++it;
  }
}

SymmetricPolynomial SymmetricPolynomial::times_c1_power(int power) const {
  if (power < 0) throw std::invalid_argument("negative c1 power");
  TermMap out;
  for (const auto& [key, value] : terms_) {
    Exponents shifted = key;
    if (shifted.empty()) shifted.push_back(0);
    shifted[0] += power;
    out.emplace(std::move(shifted), value);
  }
  return SymmetricPolynomial(degree_ + power, std::move(out));
}

SymmetricPolynomial operator*(const Rational& scalar, const SymmetricPolynomial& poly) {
  TermMap out;
  if (scalar != 0)
    for (const auto& [key, value] : poly.terms_) out.emplace(key, scalar * value);
  return SymmetricPolynomial(poly.degree_, std::move(out));
}

std::string SymmetricPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Reverse map order puts higher c_1 powers first, matching the usual
  // presentation (c1^2 + c2 rather than c2 + c1^2).
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational& value = it->second;
    const Rational mag = abs(value);
    if (first) {
      if (value < 0) out << "-";
      first = false;
    } else {
      out << (value < 0 ? " - " : " + ");
    }
    const bool unit = (mag == 1) && !it->first.empty();
    if (!unit) out << mag.str();
    bool starred = !unit;
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      if (it->first[i] == 0) continue;
      if (starred) out << "*";
      out << "c" << i + 1;
      if (it->first[i] > 1) out << "^" << it->first[i];
      starred = true;
    }
  }
  return out.str();
}

SymmetricPolynomial todd_polynomial(int p, int m) {
  if (p < 1 || p > m) throw std::invalid_argument("Todd index out of range (need 1 <= p <= m)");
  std::lock_guard<std::mutex> lock(todd_cache_mutex);
  if (static_cast<std::size_t>(p) >= todd_cache.size())
    todd_cache = compute_todd_slices(p);
  return todd_cache[static_cast<std::size_t>(p)];
}

SymmetricPolynomial integrand(int p, int m) {
  return todd_polynomial(p, m).times_c1_power(m - p + 1);
}

Rational evaluate(const SymmetricPolynomial& poly, std::span<const Rational> weights) {
  const std::size_t m = weights.size();
  // Elementary symmetric values via the product recurrence prod(1 + w_i z).
  std::vector<Rational> elementary(m + 1, Rational(0));
  elementary[0] = 1;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = std::min(i + 1, m); k >= 1; --k)
      elementary[k] += weights[i] * elementary[k - 1];

  Rational total(0);
  for (const auto& [key, coeff] : poly.terms()) {
    if (key.size() > m) continue; // c_i = 0 beyond the tuple length
    Rational term = coeff;
    for (std::size_t i = 0; i < key.size(); ++i)
      for (int rep = 0; rep < key[i]; ++rep) term *= elementary[i + 1];
    total += term;
  }
  return total;
}

Int denominator_lcm(const SymmetricPolynomial& poly) {
  Int result(1);
  for (const auto& [key, value] : poly.terms()) result = lcm(result, denominator(value));
  return result;
}

} // namespace chowstab
