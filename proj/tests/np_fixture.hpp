#pragma once

// Reference combinatorial data for the nill-paffenholz dataset: the 64
// polar-dual vertices, the tabulated cone and neighbor assignments for 16
// of them, and the fixed-point tangent-weight table of the standard
// one-parameter action. All indices here are 1-based as in the classical
// presentation; helpers convert to engine indexing.

#include "chowstab/lattice.hpp"
#include "chowstab/linear_form.hpp"

#include <array>
#include <map>
#include <vector>

namespace np_fixture {

using chowstab::Int;
using chowstab::LatticeVector;
using chowstab::LinearForm;
using chowstab::Rational;

// Rows are coordinates, columns are the dual vertices w_1..w_64.
inline const std::array<std::array<int, 64>, 7> kDualVertexMatrix = {{
    {-1, -1, -1, -1, -1, -1, 2, -1, -1, -1, 2, -1, -1, -1, 2, -1,
     -1, -1, 2, -1, -1, 2, -1, 2, -1, 0, 2, 2, 2, 2, 2, 2, -1, 0,
     0, 2, 2, -1, 0, 2, 2, -1, 0, 0, -1, -1, 0, -1, -1, 0, -1, -1,
     0, -1, 0, 0, 0, 0, 0, 0, 0, -1, -1, -1},
    {-1, -1, -1, -1, -1, 2, -1, -1, -1, 2, -1, -1, -1, 2, -1, -1,
     -1, 2, -1, -1, 2, -1, -1, 2, 0, -1, 2, 2, 2, 2, 2, -1, 2, 0,
     0, 2, -1, 2, 0, 2, -1, 2, 0, 0, -1, 0, -1, -1, 0, -1, -1, 0,
     -1, 0, -1, 0, -1, -1, -1, 0, 0, 0, 0, 0},
    {-1, -1, -1, -1, 2, -1, -1, -1, 2, -1, -1, -1, 2, -1, -1, -1,
     2, -1, -1, -1, 2, 2, 0, -1, -1, -1, 2, 2, 2, 2, -1, 2, 2, 0,
     0, -1, 2, 2, 0, -1, 2, 2, 0, -1, 0, -1, -1, 0, -1, -1, 0, -1,
     -1, 0, 0, -1, 0, 0, 0, -1, -1, 0, 0, 0},
    {-1, -1, -1, 1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1,
     1, 1, 1, 5, -1, -1, -1, -1, -1, -1, 1, -1, -1, -1, 1, 1, 1, 5,
     -1, -1, -1, -1, -1, -1, -1, -1, -1, 5, -1, -1, -1, -1, -1, -1, 5, 5,
     5, -1, -1, -1, 5, -1, -1, -1, -1, -1, -1, 5},
    {-1, 1, -1, -1, -1, -1, -1, -1, 1, 1, 1, 5, -1, -1, -1, -1,
     -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 1, -1, -1, -1, -1,
     -1, -1, -1, -1, -1, 1, 1, 1, 5, -1, 5, 5, 5, -1, -1, -1, -1, -1,
     -1, -1, -1, -1, -1, 5, -1, -1, 5, 5, -1, -1},
    {-1, -1, 1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 1, 1, 1, 5,
     -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 1, -1, -1, -1, -1, -1,
     -1, 1, 1, 1, 5, -1, -1, -1, -1, -1, -1, -1, -1, 5, 5, 5, -1, -1,
     -1, -1, -1, -1, -1, -1, 5, 5, -1, -1, 5, -1},
    {-1, -1, -1, -1, -1, -1, -1, 1, -1, -1, -1, 1, -1, -1, -1, 1,
     -1, -1, -1, 1, -1, -1, 1, -1, 1, 1, -1, -1, -1, -1, -1, -1, -1, 1,
     1, -1, -1, -1, 1, -1, -1, -1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
     1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
}};

inline std::vector<LatticeVector> dual_vertices() {
  std::vector<LatticeVector> out;
  out.reserve(64);
  for (int col = 0; col < 64; ++col) {
    LatticeVector w(7);
    for (int row = 0; row < 7; ++row) w[static_cast<std::size_t>(row)] = Int(kDualVertexMatrix[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]);
    out.push_back(std::move(w));
  }
  return out;
}

// Tabulated neighbor sets (1-based dual-vertex indices).
inline const std::map<int, std::vector<int>> kNeighborTable = {
    {1, {2, 3, 4, 5, 6, 7, 8}},
    {3, {1, 2, 4, 13, 14, 15, 16}},
    {7, {1, 11, 15, 19, 22, 24, 26}},
    {8, {1, 12, 16, 20, 23, 25, 26}},
    {19, {4, 7, 11, 15, 31, 32, 53}},
    {20, {4, 8, 12, 16, 51, 52, 53}},
    {24, {6, 7, 28, 31, 36, 40, 56}},
    {26, {7, 8, 47, 50, 53, 55, 56}},
    {27, {28, 29, 30, 31, 32, 33, 34}},
    {28, {21, 22, 24, 27, 29, 30, 35}},
    {31, {18, 19, 24, 27, 36, 40, 44}},
    {34, {27, 35, 39, 43, 44, 57, 64}},
    {35, {28, 34, 39, 43, 54, 55, 56}},
    {44, {31, 34, 52, 53, 56, 60, 61}},
    {53, {19, 20, 26, 44, 47, 50, 57}},
    {56, {24, 25, 26, 35, 44, 60, 61}},
};

// Tabulated cone assignments (1-based vertex indices of the primal).
inline const std::map<int, std::vector<int>> kConeTable = {
    {1, {1, 2, 3, 7, 8, 9, 11}},
    {3, {1, 2, 3, 7, 8, 10, 11}},
    {7, {6, 2, 3, 7, 8, 9, 11}},
    {8, {1, 2, 3, 7, 8, 9, 12}},
    {19, {6, 2, 3, 8, 9, 10, 11}},
    {20, {1, 2, 3, 8, 9, 10, 12}},
    {24, {6, 5, 3, 7, 8, 9, 11}},
    {26, {6, 2, 3, 7, 8, 9, 12}},
    {27, {6, 5, 4, 8, 9, 10, 11}},
    {28, {6, 5, 4, 7, 8, 9, 11}},
    {31, {6, 5, 3, 8, 9, 10, 11}},
    {34, {6, 5, 4, 8, 9, 10, 12}},
    {35, {6, 5, 4, 7, 8, 9, 12}},
    {44, {6, 5, 3, 8, 9, 10, 12}},
    {53, {6, 2, 3, 8, 9, 10, 12}},
    {56, {6, 5, 3, 7, 8, 9, 12}},
};

// Parameter layout: (a1, a2, a3, b1, b2, b3, c).
inline LinearForm form(std::initializer_list<int> coefficients) {
  std::vector<Rational> c;
  for (int value : coefficients) c.emplace_back(value);
  return LinearForm(std::move(c));
}

// The 64 tangent-weight multisets of the fixed points: sign patterns on
// the three a-blocks, one of four y-charts, and a sign on the last weight.
inline std::vector<std::vector<LinearForm>> weight_table() {
  std::vector<std::vector<LinearForm>> table;
  for (int chart = 1; chart <= 4; ++chart) {
    for (int signs = 0; signs < 8; ++signs) {
      const int s1 = (signs & 1) ? -1 : 1;
      const int s2 = (signs & 2) ? -1 : 1;
      const int s3 = (signs & 4) ? -1 : 1;
      for (int z : {1, -1}) {
        std::vector<LinearForm> weights;
        weights.push_back(form({s1, 0, 0, 0, 0, 0, 0}));
        weights.push_back(form({0, s2, 0, 0, 0, 0, 0}));
        weights.push_back(form({0, 0, s3, 0, 0, 0, 0}));
        // z-weight: c minus the negated a's, plus 2*b_chart off the last chart.
        std::vector<int> zc = {s1 < 0 ? -1 : 0, s2 < 0 ? -1 : 0, s3 < 0 ? -1 : 0, 0, 0, 0, 1};
        switch (chart) {
          case 1:
            weights.push_back(form({0, 0, 0, -1, 1, 0, 0})); // b2 - b1
            weights.push_back(form({0, 0, 0, -1, 0, 1, 0})); // b3 - b1
            weights.push_back(form({0, 0, 0, -1, 0, 0, 0})); // -b1
            zc[3] = 2;
            break;
          case 2:
            weights.push_back(form({0, 0, 0, 1, -1, 0, 0}));
            weights.push_back(form({0, 0, 0, 0, -1, 1, 0}));
            weights.push_back(form({0, 0, 0, 0, -1, 0, 0}));
            zc[4] = 2;
            break;
          case 3:
            weights.push_back(form({0, 0, 0, 1, 0, -1, 0}));
            weights.push_back(form({0, 0, 0, 0, 1, -1, 0}));
            weights.push_back(form({0, 0, 0, 0, 0, -1, 0}));
            zc[5] = 2;
            break;
          default:
            weights.push_back(form({0, 0, 0, 1, 0, 0, 0}));
            weights.push_back(form({0, 0, 0, 0, 1, 0, 0}));
            weights.push_back(form({0, 0, 0, 0, 0, 1, 0}));
            break;
        }
        std::vector<Rational> zr;
        for (int value : zc) zr.emplace_back(z * value);
        weights.push_back(LinearForm(std::move(zr)));
        table.push_back(std::move(weights));
      }
    }
  }
  return table;
}

// The six generating symmetries: transpositions within the first and the
// second coordinate triple, fixing everything else.
inline std::vector<chowstab::IntMatrix> symmetry_generators() {
  const auto transposition = [](int i, int j) {
    chowstab::IntMatrix g(7, LatticeVector(7, Int(0)));
    for (int k = 0; k < 7; ++k) g[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = 1;
    g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0;
    g[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = 0;
    g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
    g[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = 1;
    return g;
  };
  return {transposition(0, 1), transposition(1, 2), transposition(0, 2),
          transposition(3, 4), transposition(4, 5), transposition(3, 5)};
}

} // namespace np_fixture
