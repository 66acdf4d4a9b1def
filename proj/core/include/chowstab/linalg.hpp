#pragma once

#include "chowstab/lattice.hpp"
#include "chowstab/rational.hpp"

#include <optional>
#include <vector>

namespace chowstab {

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntMatrix = std::vector<std::vector<Int>>;

/// Exact Gaussian elimination; nullopt when the square system is singular.
std::optional<std::vector<Rational>> solve_exact(RationalMatrix lhs, std::vector<Rational> rhs);

/// Exact inverse of a square rational matrix; nullopt when singular.
std::optional<RationalMatrix> invert_exact(const RationalMatrix& mat);

/// Determinant of a square integer matrix by Bareiss fraction-free
/// elimination (all intermediates stay integral).
Int determinant(const IntMatrix& mat);

RationalMatrix to_rational(const IntMatrix& mat);

} // namespace chowstab
