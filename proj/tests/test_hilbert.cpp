#include "chowstab/builtins.hpp"
#include "chowstab/errors.hpp"
#include "chowstab/hilbert.hpp"
#include "chowstab/laurent_series.hpp"

#include <doctest.h>

namespace {

using namespace chowstab;

struct Setup {
  FanoPolytope polytope;
  Fan fan;
  DualPolytope dual;
  ToricDiagram diagram;
};

Setup setup(const std::string& name) {
  FanoPolytope polytope = builtin_polytope(name);
  Fan fan = build_fan(polytope);
  DualPolytope dual = polar_dual(fan);
  ToricDiagram diagram = toric_diagram(polytope, dual);
  return {std::move(polytope), std::move(fan), std::move(dual), std::move(diagram)};
}

LatticeVector direction(std::initializer_list<int> entries) {
  LatticeVector n;
  for (int e : entries) n.emplace_back(e);
  return n;
}

Polynomial poly(std::initializer_list<int> ascending) {
  std::vector<Rational> coeffs;
  for (int c : ascending) coeffs.emplace_back(c);
  return Polynomial(std::move(coeffs));
}

} // namespace

TEST_CASE("brion_terms precomputes admissible pairings") {
  const Setup np = setup("nill-paffenholz");
  const auto terms = brion_terms(np.diagram, np.dual, direction({1, 2, 3, 4, 5, 6, 7}));
  CHECK(terms.size() == 64);
  for (const auto& term : terms) {
    CHECK(term.edge_pairings.size() == 7);
    for (const auto& pairing : term.edge_pairings) CHECK(pairing != 0);
  }

  const Setup p1 = setup("p1");
  const auto line = brion_terms(p1.diagram, p1.dual, direction({1}));
  REQUIRE(line.size() == 2);
  CHECK(line[0].vertex_pairing == -1);
  CHECK(line[0].edge_pairings == std::vector<Int>{Int(1)});
  CHECK(line[1].edge_pairings == std::vector<Int>{Int(-1)});

  CHECK_THROWS_WITH_AS(brion_terms(p1.diagram, p1.dual, direction({0})),
                       "direction hits an edge hyperplane; choose another n", ValidationError);
}

TEST_CASE("projective line series and derivative") {
  const Setup p1 = setup("p1");
  const auto terms = brion_terms(p1.diagram, p1.dual, direction({1}));
  const auto [series, derivative] = specialized_series_and_derivative(terms, direction({1}));

  // (1+s)/(1-s)^2 normalized to a monic denominator
  CHECK(series == RationalFunction(poly({1, 1}), poly({1, -2, 1})));
  CHECK(derivative.is_zero);
  CHECK(derivative.value == RationalFunction());

  // the height-d slice count is 2d+1
  const auto coeffs = series.series_coefficients(5);
  for (int d = 0; d < 5; ++d) CHECK(coeffs[static_cast<std::size_t>(d)] == 2 * d + 1);
}

TEST_CASE("dilate oracles on small fixtures") {
  const Setup p1 = setup("p1");
  CHECK(ehrhart_oracle(p1.dual, 3) == std::vector<Int>{Int(1), Int(3), Int(5), Int(7)});

  const Setup p2 = setup("p2");
  CHECK(ehrhart_oracle(p2.dual, 1)[1] == 10);

  const Setup torus = setup("p1xp1");
  CHECK(ehrhart_oracle(torus.dual, 1)[1] == 9);

  // symmetric polytopes have zero weighted sums
  CHECK(weighted_ehrhart_oracle(torus.dual, direction({1, 2}), 3) ==
        std::vector<Int>{Int(0), Int(0), Int(0), Int(0)});
}

TEST_CASE("series and derivative agree with brute-force lattice sums") {
  const struct {
    const char* name;
    LatticeVector n;
  } cases[] = {{"p1", direction({1})},
               {"p1", direction({2})},
               {"p1xp1", direction({1, 2})},
               {"p2", direction({1, 2})},
               {"p2", direction({3, 1})}};
  for (const auto& c : cases) {
    CAPTURE(c.name);
    const Setup s = setup(c.name);
    const auto terms = brion_terms(s.diagram, s.dual, c.n);
    const auto [series, derivative] = specialized_series_and_derivative(terms, c.n);

    const auto counts = ehrhart_oracle(s.dual, 4);
    const auto series_coeffs = series.series_coefficients(5);
    for (std::size_t d = 0; d <= 4; ++d) CHECK(series_coeffs[d] == Rational(counts[d]));

    const auto weighted = weighted_ehrhart_oracle(s.dual, c.n, 4);
    const auto derivative_coeffs = derivative.value.series_coefficients(5);
    for (std::size_t d = 0; d <= 4; ++d) CHECK(derivative_coeffs[d] == Rational(weighted[d]));
  }
}

TEST_CASE("derivative scales linearly in the direction") {
  const Setup np = setup("nill-paffenholz");
  const LatticeVector n = direction({1, 2, 3, 4, 5, 6, 7});
  const LatticeVector doubled = direction({2, 4, 6, 8, 10, 12, 14});
  const auto d1 = specialized_series_and_derivative(brion_terms(np.diagram, np.dual, n), n);
  const auto d2 =
      specialized_series_and_derivative(brion_terms(np.diagram, np.dual, doubled), doubled);
  CHECK(d2.second.value == RationalFunction(Rational(2)) * d1.second.value);
  CHECK_FALSE(d1.second.is_zero);
  // the scaling leaves the x-independent series untouched
  CHECK(d1.first == d2.first);
}

TEST_CASE("derivative_test verdicts") {
  const Setup np = setup("nill-paffenholz");
  const auto detected =
      derivative_test(np.diagram, np.dual, {direction({1, 2, 3, 4, 5, 6, 7})});
  CHECK(detected.obstruction_detected);
  CHECK(detected.verdict == "obstruction detected");

  for (const std::string name : {"p1", "p1xp1", "p1cubed", "p2"}) {
    const Setup s = setup(name);
    std::vector<LatticeVector> directions;
    LatticeVector ramp(static_cast<std::size_t>(s.polytope.dim));
    for (int i = 0; i < s.polytope.dim; ++i) ramp[static_cast<std::size_t>(i)] = Int(i + 1);
    directions.push_back(ramp);
    const auto result = derivative_test(s.diagram, s.dual, directions);
    CHECK_FALSE(result.obstruction_detected);
    CHECK(result.verdict == "no obstruction found");
  }
}

TEST_CASE("derivative_test perturbs inadmissible directions and reports it") {
  const Setup p1xp1 = setup("p1xp1");
  // (1,0) pairs to zero against the vertical edges
  const auto result = derivative_test(p1xp1.diagram, p1xp1.dual, {direction({1, 0})});
  REQUIRE(result.probes.size() == 1);
  CHECK(result.probes.front().perturbed);
  CHECK(result.probes.front().used != result.probes.front().requested);
  CHECK_FALSE(result.obstruction_detected);
}

TEST_CASE("laurent expansion along xi on the projective line") {
  const Setup p1 = setup("p1");

  // b = (1): frozen values computed from the closed form
  //   C = 1/(1-e^{-t}) * (1/(1-e^{-t}) - e^{-t}/(1-e^{-3t}))
  const auto result = laurent_at_xi(p1.diagram, p1.dual, {Rational(1)}, 4);
  CHECK(result.lowest_order == -2);
  CHECK(result.values[0] == make_rational(Int(2), Int(3)));
  CHECK(result.values[1] == make_rational(Int(2), Int(3)));

  // the same values through an independent series route
  const std::size_t window = 6;
  const auto inv = [&](const Rational& alpha) {
    const Rational negated = -alpha;
    return one_minus_exp(negated, window).inverse();
  };
  auto closed = inv(Rational(1)) * (inv(Rational(1)) + (-(exp_series(Rational(-1), window) *
                                                          inv(Rational(3)))));
  CHECK(result.values[0] == closed.coefficient(-2));
  CHECK(result.values[1] == closed.coefficient(-1));
  CHECK(result.values[2] == closed.coefficient(0));

  // window contract
  CHECK(laurent_at_xi(p1.diagram, p1.dual, {Rational(1)}, 1).values.size() == 1);

  // b = 0 puts xi on the wall of every edge pairing
  CHECK_THROWS_WITH_AS(laurent_at_xi(p1.diagram, p1.dual, {Rational(0)}, 2),
                       "xi on a wall; perturb b", ValidationError);
}

TEST_CASE("leading laurent coefficient approaches the volume asymptotics") {
  // C_{-m-1}(b) -> m! * vol(P) / (m+1)^{m+1} as b -> 0
  const Setup p1 = setup("p1");
  const auto line = laurent_at_xi(p1.diagram, p1.dual, {make_rational(Int(1), Int(64))}, 1);
  const Rational line_error = line.values[0] - make_rational(Int(1), Int(2));
  CHECK(abs(line_error) < make_rational(Int(1), Int(20)));

  const Setup torus = setup("p1xp1");
  const auto flat = laurent_at_xi(
      torus.diagram, torus.dual, {make_rational(Int(1), Int(64)), make_rational(Int(1), Int(128))}, 1);
  const Rational flat_error = flat.values[0] - make_rational(Int(8), Int(27));
  CHECK(abs(flat_error) < make_rational(Int(1), Int(20)));
}

TEST_CASE("exponential rendering substitutes the grading") {
  const RationalFunction f(poly({0, -2}), poly({1, 1}));
  CHECK(to_exponential_string(f, 8) == "(-2*e^(-8*t))/(e^(-8*t) + 1)");
}
