#pragma once

#include "chowstab/rational.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace chowstab {

using LatticeVector = std::vector<Int>;

inline Int dot(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("lattice vector length mismatch");
  Int acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

inline Rational dot(const LatticeVector& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("lattice vector length mismatch");
  Rational acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += Rational(a[i]) * b[i];
  return acc;
}

/// gcd of the absolute entries; 0 for the zero vector.
inline Int content(const LatticeVector& v) {
  Int g(0);
  for (const auto& e : v) g = gcd(g, abs(e));
  return g;
}

inline bool is_primitive(const LatticeVector& v) { return content(v) == 1; }

inline LatticeVector primitive_part(const LatticeVector& v) {
  const Int g = content(v);
  if (g == 0) throw std::invalid_argument("primitive part of the zero vector");
  LatticeVector out = v;
  for (auto& e : out) e /= g;
  return out;
}

inline LatticeVector subtract(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("lattice vector length mismatch");
  LatticeVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline std::string to_string(const LatticeVector& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ",";
    out << v[i];
  }
  out << ")";
  return out.str();
}

} // namespace chowstab
