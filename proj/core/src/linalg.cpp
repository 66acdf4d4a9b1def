#include "chowstab/linalg.hpp"

#include <stdexcept>

namespace chowstab {

namespace {

void check_square(std::size_t rows, const auto& mat) {
  for (const auto& row : mat)
    if (row.size() != rows) throw std::invalid_argument("matrix is not square");
}

} // namespace

std::optional<std::vector<Rational>> solve_exact(RationalMatrix lhs, std::vector<Rational> rhs) {
  const std::size_t n = lhs.size();
  check_square(n, lhs);
  if (rhs.size() != n) throw std::invalid_argument("right-hand side length mismatch");

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && lhs[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(lhs[pivot], lhs[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t row = col + 1; row < n; ++row) {
      if (lhs[row][col] == 0) continue;
      const Rational factor = lhs[row][col] / lhs[col][col];
      for (std::size_t k = col; k < n; ++k) lhs[row][k] -= factor * lhs[col][k];
      rhs[row] -= factor * rhs[col];
    }
  }
  std::vector<Rational> out(n, Rational(0));
  for (std::size_t row = n; row-- > 0;) {
    Rational acc = rhs[row];
    for (std::size_t k = row + 1; k < n; ++k) acc -= lhs[row][k] * out[k];
    out[row] = acc / lhs[row][row];
  }
  return out;
}

std::optional<RationalMatrix> invert_exact(const RationalMatrix& mat) {
  const std::size_t n = mat.size();
  check_square(n, mat);
  RationalMatrix work = mat;
  RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(work[pivot], work[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational lead = work[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      work[col][k] /= lead;
      inv[col][k] /= lead;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || work[row][col] == 0) continue;
      const Rational factor = work[row][col];
      for (std::size_t k = 0; k < n; ++k) {
        work[row][k] -= factor * work[col][k];
        inv[row][k] -= factor * inv[col][k];
      }
    }
  }
  return inv;
}

Int determinant(const IntMatrix& mat) {
  const std::size_t n = mat.size();
  check_square(n, mat);
  if (n == 0) return Int(1);
  IntMatrix work = mat;
  Int prev(1);
  int sign = 1;
  for (std::size_t col = 0; col + 1 < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work[pivot][col] == 0) ++pivot;
    if (pivot == n) return Int(0);
    if (pivot != col) {
      std::swap(work[pivot], work[col]);
      sign = -sign;
    }
    for (std::size_t row = col + 1; row < n; ++row) {
      for (std::size_t k = col + 1; k < n; ++k) {
        // Bareiss step: the division is exact.
        work[row][k] = (work[row][k] * work[col][col] - work[row][col] * work[col][k]) / prev;
      }
      work[row][col] = 0;
    }
    prev = work[col][col];
  }
  return sign > 0 ? work[n - 1][n - 1] : -work[n - 1][n - 1];
}

RationalMatrix to_rational(const IntMatrix& mat) {
  RationalMatrix out;
  out.reserve(mat.size());
  for (const auto& row : mat) {
    std::vector<Rational> r;
    r.reserve(row.size());
    for (const auto& e : row) r.emplace_back(e);
    out.push_back(std::move(r));
  }
  return out;
}

} // namespace chowstab
