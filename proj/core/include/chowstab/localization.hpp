#pragma once

#include "chowstab/linear_form.hpp"
#include "chowstab/polytope.hpp"
#include "chowstab/symmetric_polynomial.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace chowstab {

inline constexpr std::uint64_t kDefaultSeed = 42;

/// Labels for the torus parameters. Dimension 7 gets the block labels of
/// the P^1-bundle picture (a1..a3, b1..b3, c); other dimensions x1..xm.
struct TorusParameters {
  std::vector<std::string> labels;
  static TorusParameters standard(int m);
};

/// Torus-fixed point of a smooth fan: one per maximal cone. The dual
/// basis rows u_k satisfy <u_k, v_{i_l}> = delta_{kl} against the cone's
/// generators (integral by smoothness); tangent weight k is the
/// homogeneous form xi -> <u_k, xi>, listed in generator order.
struct FixedPoint {
  MaximalCone cone;
  IntMatrix dual_basis;
  std::vector<LinearForm> tangent_weights;
};

/// One obstruction row: scaled_value is the homogeneous linear form
/// prefactor * F_Td^p, where the prefactor clears the integrand Td^p *
/// c1^{m-p+1} to integer coefficients.
struct ObstructionResult {
  int p = 0;
  LinearForm scaled_value{0};
  Rational prefactor{1};
  std::vector<std::pair<std::vector<Rational>, Rational>> verification_points;
};

struct ObstructionSurvey {
  std::vector<ObstructionResult> results;
  std::vector<int> nonzero_p;
  std::string verdict;
  bool all_vanish = false;
};

std::vector<FixedPoint> fixed_points(const Fan& fan);

/// Exact localization sum at one generic parameter sample:
///   sum over fixed points of integrand(p, m)(weights) / prod(weights).
/// Throws NonGenericSampleError when a tangent weight vanishes.
Rational localization_value(const Fan& fan, int p, std::span<const Rational> sample);

/// Low-level variant over precomputed fixed points.
Rational localization_sum(const std::vector<FixedPoint>& points, const SymmetricPolynomial& numerator,
                          std::span<const Rational> sample);

/// Reconstructs prefactor * F_Td^p as an exact linear form by sampling the
/// localization sum at m+1 generic points from a deterministic stream,
/// solving for the affine coefficients, asserting the constant term is
/// exactly zero, and verifying on three further samples.
ObstructionResult f_td(const Fan& fan, int p, std::uint64_t seed = kDefaultSeed);

/// f_td for p = 1..m plus the stability verdict.
ObstructionSurvey obstruction_report(const Fan& fan, std::uint64_t seed = kDefaultSeed);

} // namespace chowstab
