#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace chowstab {

// Exact arithmetic substrate, GMP-backed. mpq keeps every value canonical:
// coprime numerator/denominator, positive denominator, zero stored as 0/1.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  return Rational(num, den);
}

/// Parses "n", "-n" or "n/d" with arbitrary-precision components.
inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text));
    return make_rational(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
  } catch (const std::domain_error&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse rational from '" + text + "'");
  }
}

inline std::string to_string(const Rational& value) { return value.str(); }
inline std::string to_string(const Int& value) { return value.str(); }

} // namespace chowstab
