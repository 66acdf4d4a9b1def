#pragma once

#include "chowstab/lattice.hpp"
#include "chowstab/polytope.hpp"
#include "chowstab/rational_function.hpp"

#include <string>
#include <utility>
#include <vector>

namespace chowstab {

/// One vertex contribution to Brion's formula, specialized along an
/// integer direction n: the vertex factor pairs n with the dual vertex
/// (plus one power of the formal variable s = e^{-(m+1)t}), each edge
/// factor pairs n with an edge generator. Admissibility means every edge
/// pairing is nonzero.
struct BrionTerm {
  int vertex_index = 0;
  Int vertex_pairing;             // <n, w_j>
  std::vector<Int> edge_pairings; // <n, e_{j,b}>, all nonzero
};

struct DerivativeResult {
  LatticeVector direction;
  RationalFunction value; // in s = e^{-(m+1)t}
  bool is_zero = false;
};

struct DerivativeProbe {
  LatticeVector requested;
  LatticeVector used; // differs from `requested` when auto-perturbed
  bool perturbed = false;
  RationalFunction series; // single-graded Hilbert series in s
  DerivativeResult derivative;
};

struct DerivativeTestResult {
  std::vector<DerivativeProbe> probes;
  bool obstruction_detected = false;
  std::string verdict; // "obstruction detected" / "no obstruction found"
};

struct LaurentCoefficients {
  std::vector<Rational> xi; // the b of xi = (b, m+1)
  long lowest_order = 0;    // always -(m+1)
  std::vector<Rational> values;
};

/// Throws ValidationError when n is inadmissible
/// ("direction hits an edge hyperplane").
std::vector<BrionTerm> brion_terms(const ToricDiagram& diagram, const DualPolytope& dual,
                                   const LatticeVector& n);

/// Expands every Brion term in a chart variable eps (x = e^eps) over the
/// field of rational functions in s, sums, checks that the pole orders
/// -m..-1 cancel exactly, and returns the order-0 coefficient (the
/// single-graded Hilbert series C(1,..,1,s)) together with the order-1
/// coefficient (d/dx C(x^n, s) at x = 1).
std::pair<RationalFunction, DerivativeResult> specialized_series_and_derivative(
    const std::vector<BrionTerm>& terms, const LatticeVector& n);

/// Runs the derivative probe for each direction, auto-perturbing
/// inadmissible ones. A nonzero derivative certifies a nonzero
/// obstruction; all-zero results are inconclusive on their own.
DerivativeTestResult derivative_test(const ToricDiagram& diagram, const DualPolytope& dual,
                                     const std::vector<LatticeVector>& directions);

/// Laurent coefficients in t of the Hilbert series evaluated along
/// e^{-t*xi}, xi = (b, m+1), starting at order -(m+1). Requires every
/// pole pairing nonzero; throws ValidationError "xi on a wall" otherwise.
LaurentCoefficients laurent_at_xi(const ToricDiagram& diagram, const DualPolytope& dual,
                                  const std::vector<Rational>& b, int window);

/// Test oracle: lattice-point counts of the dilates d*P for d = 0..d_max
/// by bounding-box enumeration. Only for small instances; throws with a
/// size estimate when the box exceeds 10^7 points.
std::vector<Int> ehrhart_oracle(const DualPolytope& dual, int d_max);

/// Test oracle: sum of <n, a> over the lattice points a of each dilate.
std::vector<Int> weighted_ehrhart_oracle(const DualPolytope& dual, const LatticeVector& n,
                                         int d_max);

/// Rewrites a rational function in s as an expression in e^{-kt},
/// k = grading (so s^j prints as e^{-j*k*t}).
std::string to_exponential_string(const RationalFunction& value, int grading);

} // namespace chowstab
