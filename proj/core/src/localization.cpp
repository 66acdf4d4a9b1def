#include "chowstab/localization.hpp"

#include "chowstab/errors.hpp"

#include <random>
#include <sstream>

namespace chowstab {

namespace {

constexpr int kMaxRedraws = 32;

// Portable integer draw; std::uniform_int_distribution is not
// bit-reproducible across standard libraries.
long long draw_nonzero(std::mt19937_64& rng, long long magnitude) {
  const auto value = static_cast<long long>(rng() % static_cast<std::uint64_t>(magnitude)) + 1;
  return (rng() & 1u) ? value : -value;
}

std::vector<Rational> draw_sample(std::mt19937_64& rng, std::size_t m) {
  std::vector<Rational> sample;
  sample.reserve(m);
  for (std::size_t i = 0; i < m; ++i) sample.emplace_back(draw_nonzero(rng, 1'000'000));
  return sample;
}

bool is_generic(const std::vector<FixedPoint>& points, std::span<const Rational> sample) {
  for (const auto& point : points)
    for (const auto& weight : point.tangent_weights)
      if (weight.evaluate(sample) == 0) return false;
  return true;
}

std::vector<Rational> draw_generic_sample(std::mt19937_64& rng, std::size_t m,
                                          const std::vector<FixedPoint>& points) {
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    auto sample = draw_sample(rng, m);
    if (is_generic(points, sample)) return sample;
  }
  throw InternalError("no generic parameter sample found after " + std::to_string(kMaxRedraws) +
                      " redraws");
}

} // namespace

TorusParameters TorusParameters::standard(int m) {
  TorusParameters params;
  if (m == 7) {
    params.labels = {"a1", "a2", "a3", "b1", "b2", "b3", "c"};
  } else {
    for (int i = 1; i <= m; ++i) params.labels.push_back("x" + std::to_string(i));
  }
  return params;
}

std::vector<FixedPoint> fixed_points(const Fan& fan) {
  const auto smooth = smoothness_check(fan);
  if (!smooth.smooth)
    throw GeometryError("fixed-point weights require a smooth fan (" +
                        std::to_string(smooth.offending_cones.size()) + " singular cones)");

  const std::size_t m = static_cast<std::size_t>(fan.polytope.dim);
  std::vector<FixedPoint> points;
  points.reserve(fan.maximal_cones.size());
  for (const auto& cone : fan.maximal_cones) {
    RationalMatrix generators(m, std::vector<Rational>(m));
    for (std::size_t col = 0; col < m; ++col) {
      const LatticeVector& v =
          fan.polytope.vertices[static_cast<std::size_t>(cone.generator_indices[col])];
      for (std::size_t row = 0; row < m; ++row) generators[row][col] = Rational(v[row]);
    }
    const auto inverse = invert_exact(generators);
    if (!inverse) throw InternalError("cone generators became singular after fan construction");

    IntMatrix dual_basis(m, LatticeVector(m));
    std::vector<LinearForm> weights;
    weights.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
      std::vector<Rational> row(m);
      for (std::size_t j = 0; j < m; ++j) {
        if (denominator((*inverse)[k][j]) != 1)
          throw InternalError("dual basis of a unimodular cone is not integral");
        dual_basis[k][j] = numerator((*inverse)[k][j]);
        row[j] = (*inverse)[k][j];
      }
      weights.emplace_back(std::move(row));
    }
    points.push_back(FixedPoint{cone, std::move(dual_basis), std::move(weights)});
  }
  return points;
}

Rational localization_sum(const std::vector<FixedPoint>& points,
                          const SymmetricPolynomial& numerator,
                          std::span<const Rational> sample) {
  Rational total(0);
  std::vector<Rational> weights;
  for (const auto& point : points) {
    weights.clear();
    Rational det(1);
    for (const auto& form : point.tangent_weights) {
      Rational w = form.evaluate(sample);
      if (w == 0)
        throw NonGenericSampleError("tangent weight vanishes at the given parameter sample");
      det *= w;
      weights.push_back(std::move(w));
    }
    total += evaluate(numerator, weights) / det;
  }
  return total;
}

Rational localization_value(const Fan& fan, int p, std::span<const Rational> sample) {
  return localization_sum(fixed_points(fan), integrand(p, fan.polytope.dim), sample);
}

ObstructionResult f_td(const Fan& fan, int p, std::uint64_t seed) {
  const std::size_t m = static_cast<std::size_t>(fan.polytope.dim);
  const auto points = fixed_points(fan);
  const SymmetricPolynomial numerator = integrand(p, fan.polytope.dim);
  const Rational prefactor{denominator_lcm(numerator)};

  std::mt19937_64 rng(seed);

  // The localization sum is a priori an affine-linear function of the
  // parameters; m+1 independent samples determine it. Interpolating the
  // constant term too lets us check (not assume) that it is zero.
  std::vector<std::vector<Rational>> samples;
  std::vector<Rational> values;
  RationalMatrix lhs;
  std::optional<std::vector<Rational>> solution;
  for (int attempt = 0; attempt < kMaxRedraws && !solution; ++attempt) {
    while (samples.size() < m + 1) {
      auto sample = draw_generic_sample(rng, m, points);
      values.push_back(localization_sum(points, numerator, sample));
      samples.push_back(std::move(sample));
    }
    lhs.clear();
    for (const auto& sample : samples) {
      auto row = sample;
      row.emplace_back(1);
      lhs.push_back(std::move(row));
    }
    solution = solve_exact(lhs, values);
    if (!solution) {
      // Degenerate sample set; drop one point and redraw.
      samples.pop_back();
      values.pop_back();
    }
  }
  if (!solution) throw InternalError("interpolation system stayed singular after redraws");

  std::vector<Rational> coefficients(solution->begin(), solution->end() - 1);
  const Rational constant = solution->back();
  if (constant != 0)
    throw InternalError("interpolated invariant has a nonzero constant term (" + constant.str() +
                        "); localization sum is not linear");
  const LinearForm form{std::move(coefficients)};

  ObstructionResult result;
  result.p = p;
  result.prefactor = prefactor;
  result.scaled_value = prefactor * form;
  for (int extra = 0; extra < 3; ++extra) {
    auto sample = draw_generic_sample(rng, m, points);
    const Rational residual = localization_sum(points, numerator, sample) - form.evaluate(sample);
    if (residual != 0)
      throw InternalError("localization sum deviates from the interpolated linear form "
                          "(residual " + residual.str() + "); result not a linear form");
    result.verification_points.emplace_back(std::move(sample), residual);
  }
  return result;
}

ObstructionSurvey obstruction_report(const Fan& fan, std::uint64_t seed) {
  ObstructionSurvey survey;
  for (int p = 1; p <= fan.polytope.dim; ++p) {
    survey.results.push_back(f_td(fan, p, seed));
    if (!survey.results.back().scaled_value.is_zero()) survey.nonzero_p.push_back(p);
  }
  survey.all_vanish = survey.nonzero_p.empty();
  if (survey.all_vanish) {
    survey.verdict = "all obstructions vanish";
  } else {
    std::ostringstream verdict;
    verdict << "asymptotically Chow unstable candidate: F_Td^p != 0 for p = ";
    for (std::size_t i = 0; i < survey.nonzero_p.size(); ++i) {
      if (i) verdict << ",";
      verdict << survey.nonzero_p[i];
    }
    survey.verdict = verdict.str();
  }
  return survey;
}

} // namespace chowstab
