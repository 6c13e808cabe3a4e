#include <doctest.h>

#include <fstream>

#include "permclass/gf_engine.hpp"
#include "permclass/json_io.hpp"
#include "permclass/power_series.hpp"
#include "permclass/septree.hpp"

using namespace permclass;

namespace {

const RationalFunction kX = RationalFunction::x();
const RationalFunction kGeometric(Poly{0, 1}, Poly{1, -1});  // x / (1 - x)
const RationalFunction kWaton(Poly{0, 1, -2}, Poly{1, -4, 2});

USpec finiteClosure(std::initializer_list<const char*> gens) {
  std::set<Permutation> s;
  for (const char* g : gens) s.insert(parsePermutation(g));
  return USpec::finite(closure(s));
}

std::vector<ClassSpec> testPool() {
  return {ClassSpec(), ClassSpec({parsePermutation("123")}), ClassSpec({parsePermutation("231")}),
          ClassSpec({parsePermutation("2143")}),
          ClassSpec({parsePermutation("123"), parsePermutation("3214")})};
}

std::vector<USpec> testUs() {
  return {USpec::trivial(), USpec::increasing(), USpec::decreasing(), finiteClosure({"231"}),
          finiteClosure({"2413"}), finiteClosure({"3142", "321"})};
}

void checkAgainstOracle(const USpec& u, const ClassSpec& spec, std::size_t maxN) {
  const RationalFunction g = classGF(u, spec);
  const PowerSeries s = seriesExpand(g, maxN);
  const CountTable oracle = enumerateXU(u, spec, maxN);
  CHECK(s[0] == 0);
  for (std::size_t n = 1; n <= maxN; ++n) {
    CAPTURE(n);
    CHECK(s[n].get_den() == 1);
    CHECK(sgn(s[n]) >= 0);
    CHECK(s[n] == Rational(std::to_string(oracle.count(n))));
  }
}

}  // namespace

TEST_CASE("indecomposable GFs of the built-in U kinds") {
  const auto t = indecomposableGFs(USpec::trivial());
  CHECK(t.sumIndecomposable == kX);
  CHECK(t.skewIndecomposable == kX);

  const auto inc = indecomposableGFs(USpec::increasing());
  CHECK(inc.sumIndecomposable == kX);
  CHECK(inc.skewIndecomposable == kGeometric);
  // brute force: classify increasing permutations up to length 8
  const auto sumSeries = seriesExpand(inc.sumIndecomposable, 8);
  const auto skewSeries = seriesExpand(inc.skewIndecomposable, 8);
  for (std::size_t n = 1; n <= 8; ++n) {
    const Permutation id = Permutation::identity(n);
    CHECK(sumSeries[n] == (isSumDecomposable(id) ? 0 : 1));
    CHECK(skewSeries[n] == (isSkewDecomposable(id) ? 0 : 1));
  }

  const auto dec = indecomposableGFs(USpec::decreasing());
  CHECK(dec.sumIndecomposable == kGeometric);
  CHECK(dec.skewIndecomposable == kX);

  // Cl(231) = {1, 12, 21, 231}: 12 is sum decomposable, 21 and 231 skew
  // decomposable.
  const auto fin = indecomposableGFs(finiteClosure({"231"}));
  CHECK(fin.sumIndecomposable == RationalFunction(Poly{0, 1, 1, 1}));
  CHECK(fin.skewIndecomposable == RationalFunction(Poly{0, 1, 1}));
  CHECK(fin.indecomposable == kX);
  const auto simple = indecomposableGFs(finiteClosure({"2413"}));
  CHECK(simple.indecomposable == RationalFunction(Poly{0, 1, 0, 0, 1}));
}

TEST_CASE("X-inflation closed form") {
  CHECK(xInflationGF(kX, kX) == kWaton);
  CHECK(xInflationGF(kX, kX) + RationalFunction::constant(1) ==
        RationalFunction(Poly{1, -3}, Poly{1, -4, 2}));
  CHECK(xInflationGF(RationalFunction(), RationalFunction()) == kX);
  CHECK_THROWS_AS(xInflationGF(RationalFunction::constant(1), kX), std::invalid_argument);

  const RationalFunction g = xInflationGF(kX, kGeometric);
  const auto s = seriesExpand(g, 10);
  const auto oracle = enumerateXU(USpec::increasing(), ClassSpec(), 10);
  for (std::size_t n = 1; n <= 10; ++n) CHECK(s[n] == Rational(std::to_string(oracle.count(n))));
}

TEST_CASE("the profile system for X itself is the one-equation case") {
  const ProfileSystem sys = buildProfileSystem(USpec::trivial(), ClassSpec());
  CHECK(sys.properties.size() == 2);
  CHECK(sys.profiles.size() == 3);
  CHECK(solveProfileSystem(sys).gf == kWaton);
}

TEST_CASE("small classes with known answers") {
  CHECK(classGF(USpec::trivial(), ClassSpec({parsePermutation("12")})) == kGeometric);
  CHECK(classGF(USpec::trivial(), ClassSpec({parsePermutation("21")})) == kGeometric);
  CHECK(classGF(USpec::trivial(), ClassSpec({Permutation{1}})) == RationalFunction());
  CHECK(classGF(USpec::trivial(),
                ClassSpec({parsePermutation("2143"), parsePermutation("2413"),
                           parsePermutation("3142"), parsePermutation("3412")})) == kWaton);
}

TEST_CASE("X ∩ Av(123) matches the recorded enumeration") {
  std::ifstream in(PERMCLASS_GOLDEN_DIR "/x_av123_counts.json");
  REQUIRE(in);
  const auto golden = nlohmann::json::parse(in).get<CountTable>();
  REQUIRE(golden.maxN() == 12);
  const auto s = seriesExpand(classGF(USpec::trivial(), ClassSpec({parsePermutation("123")})), 12);
  for (std::size_t n = 1; n <= 12; ++n) CHECK(s[n] == Rational(std::to_string(golden.count(n))));
  CHECK(enumerateXU(USpec::trivial(), ClassSpec({parsePermutation("123")}), 9).counts ==
        std::vector<std::uint64_t>(golden.counts.begin(), golden.counts.begin() + 9));
}

TEST_CASE("every M entry has zero constant term") {
  for (const auto& u : testUs())
    for (const auto& spec : testPool()) {
      const ProfileSystem sys = buildProfileSystem(u, spec);
      for (const auto& row : sys.m)
        for (const auto& e : row)
          if (!e.isZero()) CHECK(sgn(e.constantTerm()) == 0);
      for (const auto& [q, f] : sys.uProfileGFs) CHECK(sgn(f.constantTerm()) == 0);
      for (const auto& q : sys.profiles)
        CHECK_FALSE((q.test(PropertySet::kSum) && q.test(PropertySet::kSkew)));
    }
}

TEST_CASE("combination is associative on achievable profiles") {
  for (const auto& spec : testPool()) {
    const ProfileSystem sys = buildProfileSystem(USpec::increasing(), spec);
    const auto& p = sys.properties;
    for (const auto& a : sys.profiles)
      for (const auto& b : sys.profiles)
        for (const auto& c : sys.profiles) {
          CHECK(combineSum(combineSum(a, b, p), c, p) == combineSum(a, combineSum(b, c, p), p));
          CHECK(combineSkew(combineSkew(a, b, p), c, p) ==
                combineSkew(a, combineSkew(b, c, p), p));
        }
  }
}

TEST_CASE("classGF(U, ∅) agrees with the closed form") {
  for (const auto& u : testUs()) {
    CAPTURE(u.name());
    CHECK(classGF(u, ClassSpec()) == xInflationGF(indecomposableGFs(u)));
  }
  for (const auto& u : {USpec::trivial(), USpec::increasing(), USpec::decreasing()}) {
    const auto f = indecomposableGFs(u);
    CHECK(classGF(u, ClassSpec()) == xInflationGF(f.sumIndecomposable, f.skewIndecomposable));
  }
}

TEST_CASE("engine matches enumeration across U kinds and bases") {
  for (const auto& u : testUs())
    for (const auto& spec : testPool()) {
      CAPTURE(u.name());
      CAPTURE(spec.str());
      checkAgainstOracle(u, spec, 9);
    }
}

TEST_CASE("larger bases") {
  const std::vector<ClassSpec> extra{
      ClassSpec({parsePermutation("1324")}), ClassSpec({parsePermutation("321"), parsePermutation("1234")}),
      ClassSpec({parsePermutation("25314")}), ClassSpec({parsePermutation("2413")})};
  for (const auto& spec : extra) {
    CAPTURE(spec.str());
    checkAgainstOracle(USpec::trivial(), spec, 9);
    checkAgainstOracle(USpec::increasing(), spec, 8);
  }
}

TEST_CASE("profile cap") {
  EngineOptions opts;
  opts.maxProfiles = 2;
  CHECK_THROWS_AS(buildProfileSystem(USpec::trivial(), ClassSpec(), opts), ProfileExplosionError);
}
