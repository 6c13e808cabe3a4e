#include <doctest.h>

#include "permclass/septree.hpp"
#include "support/oracles.hpp"

using namespace permclass;

TEST_CASE("buildTree examples") {
  CHECK_FALSE(buildTree(parsePermutation("2413")).has_value());
  CHECK_FALSE(buildTree(parsePermutation("3142")).has_value());
  const auto leaf = buildTree(Permutation{1});
  REQUIRE(leaf);
  CHECK(leaf->kind() == SeparatingTree::Kind::Leaf);
  CHECK(buildTree(parsePermutation("7253461")).has_value());
  CHECK(buildTree(parsePermutation("132"))->str() == "+(1, -(1, 1))");
  CHECK_THROWS_AS(buildTree(Permutation()), std::invalid_argument);
}

TEST_CASE("tree text roundtrip and canonical flattening") {
  const auto t = parseTree("+(1, +(1, 1))");
  CHECK(t.str() == "+(1, 1, 1)");
  CHECK(treeToPermutation(t) == parsePermutation("123"));
  CHECK(parseTree(" -( +(1,1) , 1 ) ").str() == "-(+(1, 1), 1)");
  CHECK_THROWS_AS(parseTree("+(1)"), ParseError);
  CHECK_THROWS_AS(parseTree("+(1, 2)"), ParseError);
  CHECK_THROWS_AS(parseTree("+(1, 1"), ParseError);
  CHECK_THROWS_AS(parseTree("1 1"), ParseError);
}

TEST_CASE("separability is exactly Av(2413, 3142) through length 7") {
  const std::vector<Permutation> basis{parsePermutation("2413"), parsePermutation("3142")};
  for (std::size_t n = 1; n <= 7; ++n) {
    std::size_t separable = 0;
    for (const auto& pi : allPermutations(n)) {
      const auto tree = buildTree(pi);
      CHECK(tree.has_value() == oracle::avoidsAll(pi, basis));
      CHECK(isSeparable(pi) == tree.has_value());
      if (!tree) continue;
      ++separable;
      CHECK(treeToPermutation(*tree) == pi);
      CHECK(tree->frontierSize() == n);
      CHECK(parseTree(tree->str()) == *tree);
      // alternation
      std::function<void(const SeparatingTree&)> alternates = [&](const SeparatingTree& t) {
        for (const auto& c : t.children()) {
          CHECK(c.kind() != t.kind());
          alternates(c);
        }
      };
      alternates(*tree);
    }
    if (n == 4) CHECK(separable == 22);
  }
  CHECK(isSeparable(Permutation()));
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& pi : allPermutations(n)) CHECK(isSeparable(pi));
}

TEST_CASE("inflate") {
  const Permutation sigma = parsePermutation("3142");
  const std::vector<Permutation> one{sigma};
  CHECK(inflate(Permutation{1}, one) == sigma);
  const std::vector<Permutation> parts{parsePermutation("12"), Permutation{1}};
  CHECK(inflate(parsePermutation("21"), parts) == parsePermutation("231"));
  const std::vector<Permutation> points{Permutation{1}, Permutation{1}};
  CHECK(inflate(parsePermutation("12"), points) == parsePermutation("12"));
  const std::vector<Permutation> wrongArity{Permutation{1}};
  CHECK_THROWS_AS(inflate(parsePermutation("12"), wrongArity), std::invalid_argument);
  const std::vector<Permutation> withEmpty{Permutation{1}, Permutation()};
  CHECK_THROWS_AS(inflate(parsePermutation("12"), withEmpty), std::invalid_argument);

  for (const auto& pi : allPermutations(5)) {
    const std::vector<Permutation> singles(5, Permutation{1});
    CHECK(inflate(pi, singles) == pi);
  }
}

TEST_CASE("X membership") {
  CHECK(isInX(parsePermutation("7253461")));
  CHECK_FALSE(isInX(parsePermutation("2143")));
  std::size_t x4 = 0;
  for (const auto& pi : allPermutations(4)) x4 += isInX(pi) ? 1 : 0;
  CHECK(x4 == 20);
}

TEST_CASE("X[trivial] is X through length 8") {
  const USpec u = USpec::trivial();
  CHECK_FALSE(isInXInflation(parsePermutation("2143"), u));
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& pi : allPermutations(n))
      REQUIRE(isInXInflation(pi, u) == oracle::avoidsAll(pi, oracle::xBasis()));
}

TEST_CASE("members of U are members of X[U]") {
  const USpec fin = USpec::finite(closure(std::set<Permutation>{parsePermutation("2413")}));
  for (const auto& sigma : fin.members()) CHECK(isInXInflation(sigma, fin));
  CHECK(isInXInflation(Permutation::identity(9), USpec::increasing()));
  CHECK(isInXInflation(Permutation::decreasing(9), USpec::decreasing()));
  CHECK_FALSE(isInXInflation(Permutation(), USpec::trivial()));
}

TEST_CASE("recursive membership matches literal inflation") {
  const std::vector<USpec> us{
      USpec::trivial(), USpec::increasing(), USpec::decreasing(),
      USpec::finite(closure(std::set<Permutation>{parsePermutation("231")})),
      USpec::finite(closure(std::set<Permutation>{parsePermutation("2413")})),
      USpec::finite(closure(std::set<Permutation>{parsePermutation("3142"),
                                                   parsePermutation("321")}))};
  constexpr std::size_t maxN = 7;
  for (const auto& u : us) {
    CAPTURE(u.name());
    const auto built = oracle::xInflationByConstruction(u, maxN);
    for (std::size_t n = 1; n <= maxN; ++n)
      for (const auto& pi : allPermutations(n)) {
        CAPTURE(pi.str());
        REQUIRE(isInXInflation(pi, u) == built.contains(pi));
      }
  }
}

TEST_CASE("X[U] is closed under one-point deletion") {
  const std::vector<USpec> us{
      USpec::increasing(),
      USpec::finite(closure(std::set<Permutation>{parsePermutation("231")}))};
  for (const auto& u : us)
    for (std::size_t n = 2; n <= 7; ++n)
      for (const auto& pi : allPermutations(n)) {
        if (!isInXInflation(pi, u)) continue;
        for (std::size_t i = 0; i < n; ++i) CHECK(isInXInflation(deletePoint(pi, i), u));
      }
}

TEST_CASE("USpec validation") {
  CHECK_THROWS_AS(USpec::finite({}), std::invalid_argument);
  CHECK_THROWS_AS(USpec::finite({parsePermutation("21")}), std::invalid_argument);
  const auto completed =
      USpec::finite({parsePermutation("21")}, USpec::Completion::Complete);
  CHECK(completed.members().size() == 2);
  CHECK(USpec::finite({Permutation{1}}) == USpec::trivial());
  CHECK_THROWS_AS(USpec::increasing().members(), std::logic_error);
}
