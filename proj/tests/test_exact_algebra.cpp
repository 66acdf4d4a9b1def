#include "chowstab/laurent_series.hpp"
#include "chowstab/polynomial.hpp"
#include "chowstab/rational.hpp"
#include "chowstab/rational_function.hpp"

#include <doctest.h>

#include <random>

namespace {

using namespace chowstab;

Polynomial poly(std::initializer_list<int> ascending) {
  std::vector<Rational> coeffs;
  for (int c : ascending) coeffs.emplace_back(c);
  return Polynomial(std::move(coeffs));
}

std::mt19937_64 rng(7);

Rational random_rational() {
  const auto num = static_cast<long long>(rng() % 41) - 20;
  const auto den = static_cast<long long>(rng() % 9) + 1;
  return make_rational(Int(num), Int(den));
}

Polynomial random_polynomial(std::size_t max_degree) {
  std::vector<Rational> coeffs(rng() % (max_degree + 1) + 1);
  for (auto& c : coeffs) c = random_rational();
  return Polynomial(std::move(coeffs));
}

} // namespace

TEST_CASE("rational backend keeps values canonical") {
  const Rational q = make_rational(Int(4), Int(-6));
  CHECK(numerator(q) == -2);
  CHECK(denominator(q) == 3);
  CHECK(Rational() == 0);
  CHECK(denominator(Rational()) == 1);
  CHECK(parse_rational("-3/4") == make_rational(Int(-3), Int(4)));
  CHECK(parse_rational("17") == 17);
  CHECK_THROWS_AS(make_rational(Int(1), Int(0)), std::domain_error);
  CHECK_THROWS(parse_rational("a/b"));
}

TEST_CASE("poly_gcd on the worked examples") {
  const Polynomial s = Polynomial::variable();

  // (s^2 - 1, s - 1) -> s - 1
  CHECK(poly_gcd(poly({-1, 0, 1}), poly({-1, 1})) == poly({-1, 1}));

  // gcd(p, 0) is the monic multiple of p
  const Polynomial p = poly({2, 4});
  CHECK(poly_gcd(p, Polynomial{}) == p.monic());
  CHECK(poly_gcd(Polynomial{}, Polynomial{}) == Polynomial{});

  // ((s-1)^3 (s+2), (s-1)(s+3)) -> s - 1, checked by division oracle
  const Polynomial lhs = poly({-1, 1}).pow(3) * poly({2, 1});
  const Polynomial rhs = poly({-1, 1}) * poly({3, 1});
  const Polynomial g = poly_gcd(lhs, rhs);
  CHECK(g == poly({-1, 1}));
  CHECK(Polynomial::divmod(lhs, g).second.is_zero());
  CHECK(Polynomial::divmod(rhs, g).second.is_zero());
  // nothing bigger divides both: their quotients are coprime
  CHECK(poly_gcd(Polynomial::divmod(lhs, g).first, Polynomial::divmod(rhs, g).first).degree() ==
        0);
}

TEST_CASE("rational function normalization") {
  const Polynomial s = Polynomial::variable();

  CHECK(ratfun_normalize(poly({-2, 2}), poly({-4, 4})) == RationalFunction(make_rational(Int(1), Int(2))));
  CHECK(ratfun_normalize(poly({-1, 0, 1}), poly({-1, 1})) == RationalFunction(poly({1, 1})));

  // (s^3 + s) / (s^2 + 1) -> s, verified by multiplying back
  const RationalFunction r = ratfun_normalize(poly({0, 1, 0, 1}), poly({1, 0, 1}));
  CHECK(r == RationalFunction(s));
  CHECK(r.numerator() * poly({1, 0, 1}) == poly({0, 1, 0, 1}) * r.denominator());

  CHECK_THROWS_WITH_AS(ratfun_normalize(poly({1}), Polynomial{}), "division by zero polynomial",
                       std::domain_error);
}

TEST_CASE("rational function normalization is idempotent on random inputs") {
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial d = random_polynomial(5);
    while (d.is_zero()) d = random_polynomial(5);
    const RationalFunction r = ratfun_normalize(random_polynomial(5), d);
    CHECK(ratfun_normalize(r.numerator(), r.denominator()) == r);
    CHECK(r.denominator().leading() == 1);
    CHECK(poly_gcd(r.numerator(), r.denominator()).degree() <= 0);
  }
}

TEST_CASE("ring axioms hold exactly on random inputs") {
  for (int trial = 0; trial < 100; ++trial) {
    const Rational a = random_rational(), b = random_rational(), c = random_rational();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
  }
  for (int trial = 0; trial < 30; ++trial) {
    const Polynomial p = random_polynomial(4);
    const Polynomial q = random_polynomial(4);
    const Polynomial r = random_polynomial(4);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p + q == q + p);
  }
}

TEST_CASE("laurent_invert reproduces the classical expansion of 1/(1-e^{-t})") {
  // 1 - e^{-t} stored to window 3 (orders 1..3)
  const auto series = one_minus_exp(Rational(-1), 3);
  REQUIRE(series.lowest_order() == 1);
  CHECK(series.coefficient(1) == 1);
  CHECK(series.coefficient(2) == make_rational(Int(-1), Int(2)));

  const auto inverse = series.inverse();
  CHECK(inverse.lowest_order() == -1);
  CHECK(inverse.coefficient(-1) == 1);
  CHECK(inverse.coefficient(0) == make_rational(Int(1), Int(2)));
  CHECK(inverse.coefficient(1) == make_rational(Int(1), Int(12)));

  // multiply back: 1 on every stored order
  const auto product = series * inverse;
  CHECK(product.coefficient(0) == 1);
  CHECK(product.coefficient(1) == 0);
  CHECK(product.coefficient(2) == 0);
}

TEST_CASE("laurent_invert trivial cases") {
  const auto one = LaurentSeries<Rational>::constant(Rational(1), 4);
  CHECK(one.inverse() == one);

  // 2 t^2 with window 1 -> (1/2) t^-2
  const LaurentSeries<Rational> monomial(2, {Rational(2)});
  const auto inv = monomial.inverse();
  CHECK(inv.lowest_order() == -2);
  CHECK(inv.coefficient(-2) == make_rational(Int(1), Int(2)));

  const LaurentSeries<Rational> not_invertible(0, {Rational(0), Rational(3)});
  CHECK_THROWS_WITH_AS(not_invertible.inverse(), "series not invertible at stored order",
                       std::domain_error);
  // after trimming the stored zero it becomes invertible
  CHECK(not_invertible.normalized().inverse().lowest_order() == -1);
}

TEST_CASE("series windows shrink conservatively") {
  const LaurentSeries<Rational> wide(0, {Rational(1), Rational(1), Rational(1), Rational(1)});
  const LaurentSeries<Rational> narrow(2, {Rational(5), Rational(1)});

  const auto product = wide * narrow;
  CHECK(product.lowest_order() == 2);
  CHECK(product.window() == 2);

  const auto sum = wide + narrow;
  CHECK(sum.lowest_order() == 0);
  CHECK(sum.highest_order() == 3); // narrow is known zero below order 2
  CHECK(sum.coefficient(1) == 1);
  CHECK(sum.coefficient(2) == 6);
}

TEST_CASE("random series have exact inverses and commute within the window") {
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t window = rng() % 5 + 2;
    std::vector<Rational> coeffs(window);
    for (auto& c : coeffs) c = random_rational();
    while (coeffs[0] == 0) coeffs[0] = random_rational();
    const long low = static_cast<long>(rng() % 7) - 3;
    const LaurentSeries<Rational> a(low, coeffs);

    const auto product = a * a.inverse();
    CHECK(product.lowest_order() == 0);
    CHECK(product.coefficient(0) == 1);
    for (long k = 1; k <= product.highest_order(); ++k) CHECK(product.coefficient(k) == 0);

    std::vector<Rational> coeffs_b(rng() % 5 + 2, Rational(0));
    for (auto& c : coeffs_b) c = random_rational();
    const LaurentSeries<Rational> b(static_cast<long>(rng() % 7) - 3, coeffs_b);
    CHECK(a * b == b * a);

    std::vector<Rational> coeffs_c(rng() % 5 + 2, Rational(0));
    for (auto& c : coeffs_c) c = random_rational();
    const LaurentSeries<Rational> c(static_cast<long>(rng() % 5) - 2, coeffs_c);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("laurent series over rational functions") {
  // both coefficient fields plug into the same template
  const RationalFunction s{Polynomial::variable()};
  const LaurentSeries<RationalFunction> series(0, {RationalFunction(1) - s, s});
  const auto inv = series.inverse();
  CHECK(inv.coefficient(0) == RationalFunction(1) / (RationalFunction(1) - s));
  const auto check = series * inv;
  CHECK(check.coefficient(0) == RationalFunction(1));
  CHECK(check.coefficient(1).is_zero());
}

TEST_CASE("rational function power series expansion") {
  // 1/(1-s) = 1 + s + s^2 + ...
  const RationalFunction geom(Polynomial(Rational(1)), poly({1, -1}));
  const auto coeffs = geom.series_coefficients(4);
  for (const auto& c : coeffs) CHECK(c == 1);
  CHECK_THROWS(RationalFunction(Polynomial(Rational(1)), Polynomial::variable())
                   .series_coefficients(2));
}
