#include <doctest.h>

#include <random>

#include "permclass/power_series.hpp"
#include "permclass/rational_function.hpp"
#include "support/oracles.hpp"

using namespace permclass;

namespace {

Poly randomPoly(std::mt19937& rng, int maxDegree, int range = 5) {
  std::uniform_int_distribution<int> coef(-range, range);
  std::vector<Rational> c(1 + rng() % (maxDegree + 1));
  for (auto& x : c) x = coef(rng);
  return Poly(std::move(c));
}

RationalFunction randomRat(std::mt19937& rng) {
  Poly den;
  while (den.isZero()) den = randomPoly(rng, 2);
  return RationalFunction(randomPoly(rng, 3), den);
}

// Random f with den(0) != 0 so it has a power series.
RationalFunction randomSeriesRat(std::mt19937& rng) {
  for (;;) {
    Poly den = randomPoly(rng, 2);
    if (sgn(den.coeff(0)) != 0) return RationalFunction(randomPoly(rng, 3), den);
  }
}

}  // namespace

TEST_CASE("polynomial basics") {
  const Poly p{1, -4, 2};
  CHECK(p.degree() == 2);
  CHECK(p.str() == "1 - 4*x + 2*x^2");
  CHECK(Poly{0, 0}.isZero());
  CHECK(Poly().degree() == -1);
  CHECK(Poly{0, 0, 3}.valuation() == 2);
  CHECK_THROWS_AS(Poly().valuation(), AlgebraError);
  CHECK(Poly{1, 1} * Poly{1, -1} == Poly{1, 0, -1});
  const auto [q, r] = Poly::divmod(Poly{1, 0, -1}, Poly{1, 1});
  CHECK(q == Poly{1, -1});
  CHECK(r.isZero());
  CHECK_THROWS_AS(Poly::divmod(p, Poly()), AlgebraError);
  CHECK(Poly::gcd(Poly{1, 0, -1}, Poly{2, 2}) == Poly{1, 1});
  CHECK(Poly{0, 1, -2}.str() == "x - 2*x^2");
  CHECK(Poly{-1}.str() == "-1");
  const Poly half(std::vector<Rational>{Rational(1, 2)});
  CHECK(half.str() == "1/2");
}

TEST_CASE("rational function canonical form") {
  const RationalFunction f(Poly{0, 0, 1}, Poly{1, 1});
  CHECK(f.num() == Poly{0, 0, 1});
  CHECK(f.den() == Poly{1, 1});
  CHECK(f + RationalFunction() == f);
  CHECK(RationalFunction(Poly{1, -1}) * RationalFunction(Poly{1}, Poly{1, -1}) ==
        RationalFunction::constant(1));
  // common factor cancels and the denominator becomes monic
  const RationalFunction g(Poly{2, 2}, Poly{4, 0, -4});
  CHECK(g.den() == Poly{-1, 1});
  CHECK(g.num() == Poly(std::vector<Rational>{Rational(-1, 2)}));
  CHECK(g == RationalFunction(Poly{1}, Poly{2, -2}));
  CHECK_THROWS_AS(RationalFunction(Poly{1}, Poly{}), AlgebraError);
  CHECK_THROWS_AS(f / RationalFunction(), AlgebraError);
  CHECK(RationalFunction(Poly{0, 1, -2}, Poly{1, -4, 2}).str() ==
        "(x - 2*x^2)/(1 - 4*x + 2*x^2)");
  CHECK(RationalFunction(Poly{0, 2}, Poly{0, 1}).str() == "2");
  CHECK(f.valuation() == 2);
  CHECK(RationalFunction(Poly{1}, Poly{0, 1}).valuation() == -1);
  CHECK_THROWS_AS(RationalFunction(Poly{1}, Poly{0, 1}).constantTerm(), AlgebraError);
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = randomRat(rng), b = randomRat(rng), c = randomRat(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == RationalFunction());
    if (!a.isZero()) CHECK(a / a == RationalFunction::constant(1));
    if (!b.isZero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("seriesExpand") {
  const auto s = seriesExpand(RationalFunction(Poly{1, -3}, Poly{1, -4, 2}), 6);
  // independent: a_k = 4 a_{k-1} - 2 a_{k-2} from 1 - 4x + 2x^2
  std::vector<long> a{1, 1};
  for (int k = 2; k <= 6; ++k) a.push_back(4 * a[k - 1] - 2 * a[k - 2]);
  for (int k = 0; k <= 6; ++k) CHECK(s[k] == a[k]);
  CHECK(a == std::vector<long>{1, 1, 2, 6, 20, 68, 232});

  const auto geo = seriesExpand(RationalFunction(Poly{0, 1}, Poly{1, -1}), 4);
  CHECK(geo.coeffs() == std::vector<Rational>{0, 1, 1, 1, 1});

  const auto waton = seriesExpand(RationalFunction(Poly{0, 1, -2}, Poly{1, -4, 2}), 6);
  CHECK(waton.coeffs() == std::vector<Rational>{0, 1, 2, 6, 20, 68, 232});

  CHECK_THROWS_AS(seriesExpand(RationalFunction(Poly{1}, Poly{0, 1}), 3), AlgebraError);
  CHECK_THROWS_AS(waton[7], std::out_of_range);
}

TEST_CASE("expansion is multiplicative") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = randomSeriesRat(rng), g = randomSeriesRat(rng);
    const std::size_t n = 20;
    const auto sf = seriesExpand(f, n), sg = seriesExpand(g, n);
    std::vector<Rational> cauchy(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; i + j <= n; ++j) cauchy[i + j] += sf[i] * sg[j];
    CHECK(seriesExpand(f * g, n).coeffs() == cauchy);
    CHECK((sf * sg).coeffs() == cauchy);
    CHECK(seriesExpand(f + g, n) == sf + sg);
  }
}

TEST_CASE("power series inverse") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = randomSeriesRat(rng);
    if (f.isZero() || sgn(f.constantTerm()) == 0) continue;
    const auto s = seriesExpand(f, 12);
    CHECK(s * s.inverse() == PowerSeries::constant(1, 12));
    CHECK(s.inverse() == seriesExpand(RationalFunction::constant(1) / f, 12));
  }
  CHECK_THROWS_AS(PowerSeries::x(4).inverse(), AlgebraError);
}

TEST_CASE("fixed-point series: separable permutations") {
  const auto phi = [](const PowerSeries& f) {
    return PowerSeries::x(f.order()) + Rational(2) * (f * f) / (Rational(1) + f);
  };
  const auto f = solveFixedPointSeries(phi, 8);
  const std::vector<Permutation> basis{parsePermutation("2413"), parsePermutation("3142")};
  const auto brute = oracle::countAv(basis, 8);
  CHECK(brute == std::vector<std::uint64_t>{1, 2, 6, 22, 90, 394, 1806, 8558});
  CHECK(f[0] == 0);
  for (std::size_t n = 1; n <= 8; ++n) CHECK(f[n] == Rational(std::to_string(brute[n - 1])));
  CHECK(phi(f) == f);
}

TEST_CASE("fixed-point series: Av(231)") {
  const auto phi = [](const PowerSeries& f) {
    const PowerSeries onePlus = Rational(1) + f;
    return PowerSeries::x(f.order()) * onePlus * onePlus;
  };
  const auto f = solveFixedPointSeries(phi, 8);
  const auto brute = oracle::countAv({parsePermutation("231")}, 8);
  CHECK(brute == std::vector<std::uint64_t>{1, 2, 5, 14, 42, 132, 429, 1430});
  for (std::size_t n = 1; n <= 8; ++n) CHECK(f[n] == Rational(std::to_string(brute[n - 1])));
  CHECK(phi(f) == f);
}

TEST_CASE("fixed-point series: constant functional and failures") {
  const auto f = solveFixedPointSeries([](const PowerSeries& s) { return PowerSeries::x(s.order()); }, 5);
  CHECK(f == PowerSeries::x(5));
  // f = f + x never settles
  CHECK_THROWS_AS(solveFixedPointSeries(
                      [](const PowerSeries& s) { return s + PowerSeries::x(s.order()); }, 5),
                  AlgebraError);
  // f = 1 has a nonzero constant term
  CHECK_THROWS_AS(solveFixedPointSeries(
                      [](const PowerSeries& s) { return PowerSeries::constant(1, s.order()); }, 5),
                  AlgebraError);
}
