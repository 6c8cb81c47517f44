#include "doctest.h"
#include "oracle.hpp"

using namespace wreath;

namespace {

std::vector<std::string> cycles_of(const std::vector<TreeAutomorphism>& v) {
  std::vector<std::string> out;
  for (const auto& g : v) out.push_back(g.cycles());
  return out;
}

/// The brute-force centralizer of a permutation group inside another.
std::set<Permutation> centralizer(const std::set<Permutation>& ambient, const std::set<Permutation>& sub) {
  std::set<Permutation> out;
  for (const auto& x : ambient) {
    bool ok = true;
    for (const auto& y : sub) ok = ok && compose(x, y) == compose(y, x);
    if (ok) out.insert(x);
  }
  return out;
}

}  // namespace

TEST_CASE("group orders and class counts") {
  CHECK(group_order(1) == 2);
  CHECK(group_order(4) == 32768);
  for (int n = 1; n <= 6; ++n) CHECK(group_order(n) == 2 * group_order(n - 1) * group_order(n - 1));
  CHECK(class_count(0) == 1);
  CHECK(class_count(3) == 20);
  CHECK(class_count(4) == 230);
}

TEST_CASE("center") {
  CHECK(cycles_of(center(1)) == std::vector<std::string>{"e", "(1 2)"});
  CHECK(cycles_of(center(2)) == std::vector<std::string>{"e", "(1 2)(3 4)"});
  CHECK(cycles_of(center(3)) == std::vector<std::string>{"e", "(1 2)(3 4)(5 6)(7 8)"});
  for (int n = 1; n <= 3; ++n) {
    CHECK(center(n) == center_closed_form(n));
    const auto g = oracle::tree_group(n);
    std::set<Permutation> got;
    for (const auto& z : center(n)) got.insert(to_permutation(z));
    CHECK(got == centralizer(g, g));
  }
}

TEST_CASE("group centralizer") {
  CHECK(cycles_of(group_centralizer(1, 1)) ==
        std::vector<std::string>{"e", "(3 4)", "(1 2)", "(1 2)(3 4)"});
  CHECK(group_centralizer(2, 1).size() == 16);
  for (int n = 1; n <= 3; ++n) {
    CHECK(group_centralizer(n, 0) == center(n));
    const auto c = group_centralizer(n, 1);
    CHECK(c == centralizer_closed_form(n));
    CHECK(BigInt(static_cast<unsigned long>(c.size())) == 2 * group_order(n));
    const auto oracle_set =
        centralizer(oracle::tree_group(n + 1), oracle::widen(oracle::tree_group(n), 1u << (n + 1)));
    std::set<Permutation> got;
    for (const auto& z : c) got.insert(to_permutation(z));
    CHECK(got == oracle_set);
  }
}

TEST_CASE("conjugacy classes") {
  const int expected[] = {2, 5, 20};
  for (int n = 1; n <= 3; ++n) {
    const auto d = conjugacy_classes(n);
    CHECK(d.count() == static_cast<std::size_t>(expected[n - 1]));
    CHECK(BigInt(static_cast<unsigned long>(d.count())) == class_count(n));
    const auto g = oracle::tree_group(n);
    CHECK(oracle::orbits(g, g).size() == d.count());
    CHECK(BigInt(static_cast<unsigned long>(d.total_size())) == group_order(n));
  }
}

TEST_CASE("orbit decompositions partition the ambient group") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{0, 1}, {1, 1}, {2, 1}, {1, 2}, {0, 3}}) {
    const auto d = orbit_decomposition(n, k);
    CHECK(BigInt(static_cast<unsigned long>(d.total_size())) == group_order(n + k));
    for (std::size_t i = 0; i < d.count(); ++i)
      for (const auto& g : d.orbits[i].elements) CHECK(d.orbit_of[g.word()] == i);
    const auto oracle_orbits = oracle::orbits(
        oracle::tree_group(n + k), oracle::widen(oracle::tree_group(n), 1u << (n + k)));
    CHECK(oracle_orbits.size() == d.count());
  }
}

TEST_CASE("orbits of A_1 on A_2") {
  const auto d = orbit_decomposition(1, 1);
  REQUIRE(d.count() == 6);
  std::set<std::vector<std::string>> got;
  for (const auto& o : d.orbits) got.insert(cycles_of(o.elements));
  const std::set<std::vector<std::string>> expected = {
      {"e"}, {"(1 2)"}, {"(3 4)"}, {"(1 2)(3 4)"}, {"(1 3)(2 4)", "(1 4)(2 3)"},
      {"(1 3 2 4)", "(1 4 2 3)"}};
  CHECK(got == expected);
}

TEST_CASE("orbit count predictions") {
  CHECK(predicted_orbit_count(1, 1).corrected == 6);
  CHECK(predicted_orbit_count(2, 1).corrected == 48);
  CHECK(predicted_orbit_count(1, 2).corrected == 80);
  CHECK(predicted_orbit_count(1, 1).literal == 4);
  CHECK(predicted_orbit_count(1, 2).literal == 48);
  CHECK(orbit_decomposition(2, 1).count() == 48);
  // The brute-force count at (1,2) adjudicates the two readings.
  CHECK(orbit_decomposition(1, 2).count() == 80);
}

TEST_CASE("structured labeling is a bijection onto orbits") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}}) {
    const auto d = orbit_decomposition(n, k);
    const auto s = structured_labeling(d, n, k);
    CHECK(s.labels_are_orbits);
    CHECK(s.bijective);
    CHECK(s.labels.size() == d.count());
    std::set<std::uint32_t> hit;
    for (const auto& l : s.labels) hit.insert(l.orbit);
    CHECK(hit.size() == d.count());
  }
}

TEST_CASE("right cosets") {
  const auto c = right_coset_reps(1, 0);
  CHECK(c.representatives.size() == 4);
  const auto names = cycles_of(c.representatives);
  const auto b = beta(2, 2);
  const auto h = oracle::elem(2, "(3 4)");
  const std::set<std::string> expected = {"e", "(3 4)", b.cycles(), multiply(h, b).cycles()};
  CHECK(std::set<std::string>(names.begin(), names.end()) == expected);
  for (auto s : c.sizes) CHECK(s == 2);
  CHECK(right_coset_reps(2, 0).representatives.size() == 16);
  CHECK(right_coset_reps(1, 1).representatives.size() == 64);
  for (auto [n, l] : std::vector<std::pair<int, int>>{{1, 0}, {2, 0}, {3, 0}, {1, 1}, {2, 1}, {1, 2}}) {
    const auto cs = right_coset_reps(n, l);
    CHECK(cs.disjoint);
    CHECK(cs.covers);
    CHECK(BigInt(static_cast<unsigned long>(cs.total_size())) == group_order(n + l + 1));
    // Oracle: the cosets A_n r computed from permutations are pairwise disjoint.
    const auto base = enumerate(SubgroupSpec::embedded(n), n + l + 1);
    std::set<Permutation> seen;
    for (const auto& r : cs.representatives)
      for (const auto& a : base) REQUIRE(seen.insert(compose(to_permutation(a), to_permutation(r))).second);
    CHECK(BigInt(static_cast<unsigned long>(seen.size())) == group_order(n + l + 1));
  }
}

TEST_CASE("double cosets") {
  const auto d1 = double_cosets(1);
  CHECK(cycles_of(d1.representatives) == std::vector<std::string>{"e", "(3 4)", "(1 3)(2 4)"});
  CHECK(d1.sizes == std::vector<std::size_t>{2, 2, 4});
  CHECK(cycles_of(double_coset(1, beta(2, 2))) ==
        std::vector<std::string>{"(1 3)(2 4)", "(1 3 2 4)", "(1 4 2 3)", "(1 4)(2 3)"});
  const auto d2 = double_cosets(2);
  CHECK(d2.representatives.size() == 9);
  CHECK(d2.total_size() == 128);
  for (int n = 1; n <= 3; ++n) {
    const auto d = double_cosets(n);
    const auto order = group_order(n).get_ui();
    CHECK(d.disjoint);
    CHECK(d.covers);
    CHECK(d.representatives.size() == order + 1);
    std::size_t big = 0;
    for (std::size_t i = 0; i < d.sizes.size(); ++i) {
      if (d.representatives[i] == beta(n + 1, n + 1)) {
        big = d.sizes[i];
      } else {
        CHECK(d.sizes[i] == order);
        CHECK(contains(SubgroupSpec::hat(n), d.representatives[i]));
      }
    }
    CHECK(big == order * order);
    CHECK(BigInt(static_cast<unsigned long>(order * order + order * order)) == group_order(n + 1));
  }
}

TEST_CASE("centralizer algebra basis") {
  const auto basis = centralizer_algebra_basis(1, 1);
  CHECK(basis.size() == 6);
  const auto o = orbit_sum(beta(2, 2), SubgroupSpec::embedded(1));
  CHECK(std::find(basis.begin(), basis.end(), o) != basis.end());
  for (auto [n, k] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}})
    for (const auto& v : centralizer_algebra_basis(n, k)) CHECK(centralizes(v, SubgroupSpec::embedded(n)));
  for (int n = 1; n <= 3; ++n)
    CHECK(BigInt(static_cast<unsigned long>(centralizer_algebra_basis(n, 0).size())) == class_count(n));
  const auto closure = check_basis_closure(1, 1);
  CHECK(closure.closed);
  CHECK(closure.products == 36);
  CHECK(check_basis_closure(2, 1).closed);
}

TEST_CASE("expansion in the orbit basis") {
  const auto d = orbit_decomposition(1, 1);
  const auto o = orbit_sum(beta(2, 2), SubgroupSpec::embedded(1));
  const auto coords = expand_in_orbit_basis(Rational(3, 2) * o, d);
  REQUIRE(coords.has_value());
  std::size_t nonzero = 0;
  for (const auto& c : *coords) nonzero += c != 0 ? 1 : 0;
  CHECK(nonzero == 1);
  CHECK_FALSE(expand_in_orbit_basis(AlgebraElement::basis(beta(2, 2)), d).has_value());
}

TEST_CASE("presentation relations (1) and (2) hold") {
  for (int n = 1; n <= 4; ++n) {
    const auto p = check_presentation(n);
    for (const auto& x : p.instances)
      if (x.family != 3) CHECK(x.holds);
  }
  const auto p3 = check_presentation(3);
  const auto is = [](const RelationInstance& x, int f, int i, int j, int k) {
    return x.family == f && x.i == i && x.j == j && x.k == k;
  };
  auto find = [&](const PresentationReport& p, int f, int i, int j, int k) {
    for (const auto& x : p.instances)
      if (is(x, f, i, j, k)) return &x;
    return static_cast<const RelationInstance*>(nullptr);
  };
  REQUIRE(find(check_presentation(2), 2, 1, 2, 0) != nullptr);
  CHECK(find(check_presentation(2), 2, 1, 2, 0)->holds);
  REQUIRE(find(p3, 3, 1, 2, 1) != nullptr);
}

TEST_CASE("relation (3) as literally indexed fails; root-first indexing holds") {
  // Oracle: evaluate (b_1 b_2 b_1 b_3)^2 on leaf permutations built from the product formula.
  const auto b1 = oracle::perm(3, "(1 2)");
  const auto b2 = oracle::perm(3, "(1 3)(2 4)");
  const auto b3 = oracle::perm(3, "(1 5)(2 6)(3 7)(4 8)");
  const auto base = compose(compose(compose(b1, b2), b1), b3);
  CHECK_FALSE(power(base, 2).is_identity());

  const auto p3 = check_presentation(3);
  CHECK_FALSE(p3.all_hold());
  REQUIRE(p3.first_failure() != nullptr);
  CHECK(p3.first_failure()->family == 3);
  CHECK(p3.first_failure()->i == 1);
  CHECK(p3.first_failure()->j == 2);
  CHECK(p3.first_failure()->k == 1);
  for (int n = 1; n <= 5; ++n) CHECK(check_presentation(n).root_first_all_hold());
  CHECK(check_presentation(2).all_hold());
}
