#include "chowstab/hilbert.hpp"

#include "chowstab/errors.hpp"
#include "chowstab/laurent_series.hpp"

#include <sstream>

namespace chowstab {

namespace {

using RatSeries = LaurentSeries<Rational>;
using FunSeries = LaurentSeries<RationalFunction>;

// 1/(1 - e^{k*eps}) to the given window: pole of order one at eps = 0.
RatSeries inverted_edge_factor(const Int& k, std::size_t window) {
  return one_minus_exp(Rational(k), window).inverse();
}

} // namespace

std::vector<BrionTerm> brion_terms(const ToricDiagram& diagram, const DualPolytope& dual,
                                   const LatticeVector& n) {
  const std::size_t m = static_cast<std::size_t>(dual.dim);
  if (n.size() != m)
    throw ValidationError("direction has " + std::to_string(n.size()) +
                          " entries, expected " + std::to_string(m));
  if (diagram.generators.size() != dual.vertices.size())
    throw ValidationError("toric diagram does not match the dual polytope");

  std::vector<BrionTerm> terms;
  terms.reserve(dual.vertices.size());
  for (std::size_t j = 0; j < dual.vertices.size(); ++j) {
    BrionTerm term;
    term.vertex_index = static_cast<int>(j);
    term.vertex_pairing = dot(n, dual.vertices[j]);
    for (const auto& edge : dual.edge_generators[j]) {
      Int pairing = dot(n, edge);
      if (pairing == 0)
        throw ValidationError("direction hits an edge hyperplane; choose another n");
      term.edge_pairings.push_back(std::move(pairing));
    }
    terms.push_back(std::move(term));
  }
  return terms;
}

std::pair<RationalFunction, DerivativeResult> specialized_series_and_derivative(
    const std::vector<BrionTerm>& terms, const LatticeVector& n) {
  if (terms.empty()) throw ValidationError("empty Brion term list");
  const std::size_t m = terms.front().edge_pairings.size();
  // Orders -m..+1: pole cancellation checks plus the two outputs.
  const std::size_t window = m + 2;

  const Polynomial s = Polynomial::variable();
  FunSeries total = FunSeries::zero(-static_cast<long>(m), window);

  for (const auto& term : terms) {
    // Product of the edge factors stays over Rational.
    RatSeries edges = RatSeries::constant(Rational(1), window);
    for (const auto& k : term.edge_pairings) edges = edges * inverted_edge_factor(k, window);

    // Vertex factor 1/(1 - e^{u*eps} * s): coefficients in Q(s). Order j
    // carries -s * u^j / j! except for the constant 1 - s.
    std::vector<RationalFunction> vertex(window);
    Rational power(1);
    for (std::size_t j = 0; j < window; ++j) {
      Polynomial numerator = Rational(-power) * s;
      if (j == 0) numerator += Polynomial(Rational(1));
      vertex[j] = RationalFunction(std::move(numerator));
      power = power * Rational(term.vertex_pairing) / Rational(static_cast<int>(j) + 1);
    }
    const FunSeries vertex_inverse = FunSeries(0, std::move(vertex)).inverse();

    const FunSeries lifted =
        edges.map<RationalFunction>([](const Rational& c) { return RationalFunction(c); });
    total = total + lifted * vertex_inverse;
  }

  for (long order = -static_cast<long>(m); order < 0; ++order) {
    if (!total.coefficient(order).is_zero()) {
      std::ostringstream msg;
      msg << "Brion pole cancellation failed at order " << order << " (got "
          << total.coefficient(order).to_string() << ")";
      throw InternalError(msg.str());
    }
  }

  DerivativeResult derivative;
  derivative.direction = n;
  derivative.value = total.coefficient(1);
  derivative.is_zero = derivative.value.is_zero();
  return {total.coefficient(0), std::move(derivative)};
}

DerivativeTestResult derivative_test(const ToricDiagram& diagram, const DualPolytope& dual,
                                     const std::vector<LatticeVector>& directions) {
  const std::size_t m = static_cast<std::size_t>(dual.dim);
  DerivativeTestResult result;
  for (const auto& requested : directions) {
    DerivativeProbe probe;
    probe.requested = requested;
    probe.used = requested;

    std::vector<BrionTerm> terms;
    bool admissible = false;
    try {
      terms = brion_terms(diagram, dual, probe.used);
      admissible = true;
    } catch (const ValidationError&) {
      if (requested.size() != m) throw;
    }
    if (!admissible) {
      // Nudge along a fixed direction with strictly growing coordinates;
      // each inadmissibility is a linear condition on the step count, so
      // a small number of steps always escapes.
      LatticeVector nudge(m);
      Int scale(1);
      for (std::size_t i = 0; i < m; ++i) {
        nudge[i] = scale;
        scale *= Int(static_cast<int>(m) + 2);
      }
      for (int step = 1; step <= 64 && !admissible; ++step) {
        for (std::size_t i = 0; i < m; ++i) probe.used[i] = requested[i] + Int(step) * nudge[i];
        try {
          terms = brion_terms(diagram, dual, probe.used);
          admissible = true;
          probe.perturbed = true;
        } catch (const ValidationError&) {
        }
      }
      if (!admissible)
        throw InternalError("could not perturb direction " + to_string(requested) +
                            " to an admissible one");
    }

    auto [series, derivative] = specialized_series_and_derivative(terms, probe.used);
    probe.series = std::move(series);
    probe.derivative = std::move(derivative);
    if (!probe.derivative.is_zero) result.obstruction_detected = true;
    result.probes.push_back(std::move(probe));
  }
  result.verdict = result.obstruction_detected ? "obstruction detected" : "no obstruction found";
  return result;
}

LaurentCoefficients laurent_at_xi(const ToricDiagram& diagram, const DualPolytope& dual,
                                  const std::vector<Rational>& b, int window) {
  const std::size_t m = static_cast<std::size_t>(dual.dim);
  if (b.size() != m)
    throw ValidationError("xi has " + std::to_string(b.size()) + " entries, expected " +
                          std::to_string(m));
  if (window < 1) throw ValidationError("window must be positive");
  const std::size_t w = static_cast<std::size_t>(window);

  // 1/(1 - e^{-t*alpha}) for a nonzero rational pole pairing alpha.
  const auto inverted_factor = [&](const Rational& alpha) {
    if (alpha == 0) throw ValidationError("xi on a wall; perturb b");
    const Rational negated = -alpha;
    return one_minus_exp(negated, w).inverse();
  };

  RatSeries total = RatSeries::zero(-static_cast<long>(m) - 1, w);
  for (std::size_t j = 0; j < dual.vertices.size(); ++j) {
    // <mu_j, xi> = <w_j, b> + (m+1) since mu_j = (w_j, 1) and xi = (b, m+1).
    Rational alpha = dot(dual.vertices[j], b) + Rational(static_cast<int>(m) + 1);
    RatSeries term = inverted_factor(alpha);
    for (const auto& edge : dual.edge_generators[j]) term = term * inverted_factor(dot(edge, b));
    total = total + term;
  }

  LaurentCoefficients out;
  out.xi = b;
  out.lowest_order = total.lowest_order();
  for (long order = total.lowest_order(); order <= total.highest_order(); ++order)
    out.values.push_back(total.coefficient(order));
  return out;
}

namespace {

void enumerate_box(const DualPolytope& dual, int d, const std::vector<long long>& lo,
                   const std::vector<long long>& hi, LatticeVector& point, std::size_t coord,
                   Int& count, const LatticeVector* weight_direction, Int& weighted) {
  if (coord == point.size()) {
    for (const auto& v : dual.primal_vertices)
      if (dot(v, point) < -Int(d)) return;
    ++count;
    if (weight_direction) weighted += dot(*weight_direction, point);
    return;
  }
  for (long long x = lo[coord]; x <= hi[coord]; ++x) {
    point[coord] = Int(x);
    enumerate_box(dual, d, lo, hi, point, coord + 1, count, weight_direction, weighted);
  }
}

std::pair<std::vector<Int>, std::vector<Int>> dilate_scan(const DualPolytope& dual, int d_max,
                                                          const LatticeVector* direction) {
  const std::size_t m = static_cast<std::size_t>(dual.dim);
  if (m > 3) throw ValidationError("dilate enumeration oracle is limited to dimension <= 3");
  if (d_max < 0) throw ValidationError("negative dilate bound");

  std::vector<Int> counts;
  std::vector<Int> weighted_sums;
  for (int d = 0; d <= d_max; ++d) {
    std::vector<long long> lo(m), hi(m);
    Int box(1);
    for (std::size_t i = 0; i < m; ++i) {
      Int vmin = dual.vertices.front()[i];
      Int vmax = vmin;
      for (const auto& w : dual.vertices) {
        vmin = std::min(vmin, w[i]);
        vmax = std::max(vmax, w[i]);
      }
      lo[i] = static_cast<long long>(vmin * d);
      hi[i] = static_cast<long long>(vmax * d);
      box *= Int(hi[i] - lo[i] + 1);
    }
    if (box > 10'000'000)
      throw ValidationError("dilate " + std::to_string(d) + " needs a bounding box of " +
                            box.str() + " points; oracle refuses above 10^7");
    Int count(0);
    Int weighted(0);
    LatticeVector point(m, Int(0));
    enumerate_box(dual, d, lo, hi, point, 0, count, direction, weighted);
    counts.push_back(count);
    weighted_sums.push_back(weighted);
  }
  return {counts, weighted_sums};
}

} // namespace

std::vector<Int> ehrhart_oracle(const DualPolytope& dual, int d_max) {
  return dilate_scan(dual, d_max, nullptr).first;
}

std::vector<Int> weighted_ehrhart_oracle(const DualPolytope& dual, const LatticeVector& n,
                                         int d_max) {
  if (n.size() != static_cast<std::size_t>(dual.dim))
    throw ValidationError("direction length does not match dimension");
  return dilate_scan(dual, d_max, &n).second;
}

std::string to_exponential_string(const RationalFunction& value, int grading) {
  const auto render = [&](const Polynomial& poly) {
    std::ostringstream out;
    bool first = true;
    const auto& coeffs = poly.coefficients();
    for (std::size_t i = coeffs.size(); i-- > 0;) {
      const Rational& c = coeffs[i];
      if (c == 0) continue;
      const Rational mag = abs(c);
      if (first) {
        if (c < 0) out << "-";
        first = false;
      } else {
        out << (c < 0 ? " - " : " + ");
      }
      const bool unit = (mag == 1);
      if (i == 0 || !unit) out << mag.str();
      if (i > 0) {
        if (!unit) out << "*";
        out << "e^(-" << grading * static_cast<long long>(i) << "*t)";
      }
    }
    return first ? std::string("0") : out.str();
  };
  if (value.denominator() == Polynomial(Rational(1))) return render(value.numerator());
  return "(" + render(value.numerator()) + ")/(" + render(value.denominator()) + ")";
}

} // namespace chowstab
