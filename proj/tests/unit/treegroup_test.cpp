#include <map>
#include <random>

#include "doctest.h"
#include "oracle.hpp"

using namespace wreath;

TEST_CASE("identity") {
  CHECK(identity(0).swap_word().empty());
  CHECK(identity(2).swap_word() == "000");
  CHECK(to_permutation(identity(2)).is_identity());
  for (const auto& g : enumerate_group(2)) CHECK(multiply(identity(2), g) == g);
}

TEST_CASE("swap word length and canonical equality") {
  for (int n = 0; n <= 3; ++n)
    for (const auto& g : enumerate_group(n)) {
      CHECK(g.swap_word().size() == node_count(n));
      CHECK(TreeAutomorphism::from_swap_word(g.swap_word()) == g);
    }
}

TEST_CASE("beta generators") {
  CHECK(to_permutation(beta(1, 1)) == oracle::perm(1, "(1 2)"));
  CHECK(to_permutation(beta(2, 2)) == oracle::perm(2, "(1 3)(2 4)"));
  CHECK(to_permutation(beta(3, 3)) == oracle::perm(3, "(1 5)(2 6)(3 7)(4 8)"));
  for (int n = 1; n <= 4; ++n)
    for (int i = 1; i <= n; ++i) {
      CHECK(multiply(beta(n, i), beta(n, i)) == identity(n));
      CHECK(inverse(beta(n, i)) == beta(n, i));
    }
  CHECK_THROWS_AS(beta(2, 3), IndexOutOfRange);
}

TEST_CASE("beta products") {
  CHECK(beta_product(2, {}) == identity(2));
  const auto p = compose(oracle::perm(2, "(1 2)"), oracle::perm(2, "(1 3)(2 4)"));
  CHECK(to_permutation(beta_product(2, {1, 2})) == p);
  CHECK(beta_product(3, {2, 3}) == multiply(beta(3, 2), beta(3, 3)));
}

TEST_CASE("multiply worked example") {
  const auto g = multiply(beta(2, 1), beta(2, 2));
  CHECK(g.swap_word() == "101");
  CHECK(g.cycles() == "(1 3 2 4)");
  CHECK(from_permutation(2, oracle::perm(2, "(1 3 2 4)")).swap_word() == "101");
}

TEST_CASE("closure and inverse laws in A_2") {
  const auto a2 = enumerate_group(2);
  std::set<TreeAutomorphism> products;
  for (const auto& g : a2)
    for (const auto& h : a2) {
      products.insert(multiply(g, h));
      CHECK(inverse(multiply(g, h)) == multiply(inverse(h), inverse(g)));
    }
  CHECK(products.size() == 8);
  CHECK(inverse(identity(3)) == identity(3));
}

TEST_CASE("to_permutation is an injective homomorphism for n <= 3") {
  for (int n = 0; n <= 3; ++n) {
    const auto group = enumerate_group(n);
    std::set<Permutation> images;
    for (const auto& g : group) images.insert(to_permutation(g));
    CHECK(images.size() == group.size());
    CHECK(images == oracle::tree_group(n));
    for (const auto& g : group)
      for (const auto& h : group)
        REQUIRE(to_permutation(multiply(g, h)) == compose(to_permutation(g), to_permutation(h)));
  }
}

TEST_CASE("group axioms for n <= 3 and random associativity at n = 4") {
  for (int n = 1; n <= 2; ++n) {
    const auto group = enumerate_group(n);
    for (const auto& a : group)
      for (const auto& b : group)
        for (const auto& c : group) REQUIRE(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
  }
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> word(0, (std::uint64_t{1} << 7) - 1);
  for (int t = 0; t < 2000; ++t) {
    const auto a = TreeAutomorphism::from_word(3, word(rng));
    const auto b = TreeAutomorphism::from_word(3, word(rng));
    const auto c = TreeAutomorphism::from_word(3, word(rng));
    REQUIRE(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    REQUIRE(multiply(a, inverse(a)) == identity(3));
  }
  std::uniform_int_distribution<std::uint64_t> word4(0, (std::uint64_t{1} << 15) - 1);
  for (int t = 0; t < 2000; ++t) {
    const auto a = TreeAutomorphism::from_word(4, word4(rng));
    const auto b = TreeAutomorphism::from_word(4, word4(rng));
    const auto c = TreeAutomorphism::from_word(4, word4(rng));
    REQUIRE(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
  }
}

TEST_CASE("leaf action of single swaps") {
  CHECK(to_permutation(TreeAutomorphism::from_swap_word("100")) == oracle::perm(2, "(1 3)(2 4)"));
  CHECK(to_permutation(TreeAutomorphism::from_swap_word("010")) == oracle::perm(2, "(1 2)"));
  CHECK(to_permutation(TreeAutomorphism::from_swap_word("000")).is_identity());
}

TEST_CASE("from_permutation") {
  CHECK_THROWS_AS(from_permutation(2, oracle::perm(2, "(1 2 3)")), NotATreeAutomorphism);
  for (const auto& g : enumerate_group(3)) CHECK(from_permutation(3, to_permutation(g)) == g);
}

TEST_CASE("perm_embed") {
  CHECK(to_permutation(perm_embed(beta(1, 1))) == oracle::perm(2, "(1 2)"));
  CHECK(perm_embed(identity(2)) == identity(3));
  const auto a2 = enumerate_group(2);
  for (const auto& g : a2)
    for (const auto& h : a2) CHECK(perm_embed(multiply(g, h)) == multiply(perm_embed(g), perm_embed(h)));
}

TEST_CASE("hat_embed") {
  CHECK(hat_embed(beta(1, 1)).cycles() == "(3 4)");
  CHECK(hat_embed(oracle::elem(2, "(1 2)")).cycles() == "(5 6)");
  for (int n = 1; n <= 3; ++n) {
    std::set<TreeAutomorphism> hats;
    for (const auto& g : enumerate_group(n)) {
      const auto conj = conjugate(perm_embed(g), beta(n + 1, n + 1));
      CHECK(conj == hat_embed(g));
      hats.insert(conj);
    }
    std::set<TreeAutomorphism> expected;
    for (const auto& g : enumerate(SubgroupSpec::hat(n), n + 1)) expected.insert(g);
    CHECK(hats == expected);
  }
}

TEST_CASE("A_n and hat(A_n) commute elementwise") {
  for (int n = 1; n <= 3; ++n) {
    const auto a = enumerate(SubgroupSpec::embedded(n), n + 1);
    const auto b = enumerate(SubgroupSpec::hat(n), n + 1);
    for (const auto& x : a)
      for (const auto& y : b) REQUIRE(multiply(x, y) == multiply(y, x));
  }
}

TEST_CASE("conjugate") {
  for (const auto& g : enumerate_group(2)) CHECK(conjugate(g, identity(2)) == g);
  CHECK(conjugate(beta(2, 2), beta(2, 1)).cycles() == "(1 4)(2 3)");
  const auto a2 = enumerate_group(2);
  for (const auto& g : a2)
    for (const auto& h : a2)
      CHECK(cycle_type(to_permutation(conjugate(g, h))) == cycle_type(to_permutation(g)));
}

TEST_CASE("enumerate") {
  const auto a1 = enumerate(SubgroupSpec::full(), 1);
  REQUIRE(a1.size() == 2);
  CHECK(a1[0].cycles() == "e");
  CHECK(a1[1].cycles() == "(1 2)");
  const std::size_t sizes[] = {2, 8, 128, 32768};
  for (int n = 1; n <= 4; ++n) CHECK(enumerate_group(n).size() == sizes[n - 1]);
  const auto h = enumerate(SubgroupSpec::hat(1), 2);
  REQUIRE(h.size() == 2);
  CHECK(h[1].cycles() == "(3 4)");
  CHECK_THROWS_AS(enumerate_group(5), LevelTooLarge);
  const auto a3 = enumerate_group(3);
  CHECK(std::is_sorted(a3.begin(), a3.end()));
}

TEST_CASE("enumerated subgroups match generated permutation groups") {
  for (const auto& spec : {SubgroupSpec::embedded(2), SubgroupSpec::hat(2),
                           SubgroupSpec::hat_chain(1, 2), SubgroupSpec::trivial()}) {
    std::set<Permutation> listed;
    for (const auto& g : enumerate(spec, 3)) listed.insert(to_permutation(g));
    std::vector<Permutation> gens;
    for (const auto& g : generators(spec, 3)) gens.push_back(to_permutation(g));
    CHECK(listed == oracle::generated(gens, 8));
    for (const auto& g : enumerate_group(3)) CHECK(contains(spec, g) == (listed.count(to_permutation(g)) == 1));
  }
}

TEST_CASE("factorize") {
  const auto f0 = factorize(identity(2), 1);
  CHECK(f0.base == identity(2));
  CHECK(f0.indices.empty());
  for (const auto& h : f0.hats) CHECK(h.is_identity());
  const auto f = factorize(beta(2, 2), 1);
  CHECK(f.base.is_identity());
  CHECK(f.indices == std::vector<int>{2});

  std::map<std::vector<int>, int> by_index;
  for (const auto& g : enumerate_group(3)) {
    const auto parts = factorize(g, 1);
    CHECK(recompose(parts) == g);
    ++by_index[parts.indices];
  }
  CHECK(by_index.size() == 4);
  for (const auto& [I, count] : by_index) CHECK(count == 32);
}

TEST_CASE("factorize round-trips and factors lie in their subgroups") {
  for (auto [n, l] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {2, 0}, {2, 1}, {3, 0}}) {
    const int top = n + l + 1;
    for (const auto& g : enumerate_group(top)) {
      const auto parts = factorize(g, n);
      REQUIRE(recompose(parts) == g);
      CHECK(contains(SubgroupSpec::embedded(n), parts.base));
      REQUIRE(parts.hats.size() == static_cast<std::size_t>(l + 1));
      for (int j = 0; j <= l; ++j) CHECK(contains(SubgroupSpec::hat(n + j), parts.hats[j]));
      for (int i : parts.indices) CHECK((i > n && i <= top));
    }
  }
}

TEST_CASE("cycle notation") {
  CHECK(identity(3).cycles() == "e");
  CHECK(Permutation::from_cycles(4, "(2,4)(1,3)").cycle_notation() == "(1 3)(2 4)");
}
