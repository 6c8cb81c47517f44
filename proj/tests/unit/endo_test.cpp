#include "doctest.h"
#include "oracle.hpp"

using namespace wreath;

namespace {

/// dim End of the bimodule C[G] (x)_K C[H] by Burnside: orbits of K x K on G x H under
/// (k1, k2).(g, h) = (k1 g k2^-1, k2 h k1^-1), with K = A_{n-l} embedded in both factors.
std::size_t bimodule_end_dimension(int n, int k, int l) {
  const auto g_set = oracle::tree_group(n + k - l);
  const auto h_set = oracle::tree_group(n);
  const auto k_set = oracle::tree_group(n - l);
  const auto k_left = oracle::widen(k_set, 1u << (n + k - l));
  const auto k_right = oracle::widen(k_set, 1u << n);
  std::vector<std::pair<Permutation, Permutation>> ks;
  {
    auto a = k_left.begin();
    auto b = k_right.begin();
    for (; a != k_left.end(); ++a, ++b) ks.emplace_back(*a, *b);
  }
  std::size_t fixed = 0;
  for (const auto& [k1l, k1r] : ks)
    for (const auto& [k2l, k2r] : ks) {
      std::size_t fg = 0, fh = 0;
      for (const auto& g : g_set) fg += compose(compose(k1l, g), k2l.inverse()) == g ? 1 : 0;
      for (const auto& h : h_set) fh += compose(compose(k2r, h), k1r.inverse()) == h ? 1 : 0;
      fixed += fg * fh;
    }
  return fixed / (ks.size() * ks.size());
}

}  // namespace

TEST_CASE("tensor basis sizes") {
  CHECK(tensor_basis(1, 1, 1).size() == 4);
  CHECK(tensor_basis(2, 1, 1).size() == 32);
  for (auto [n, k, l] : std::vector<std::tuple<int, int, int>>{{1, 1, 1}, {2, 1, 1}, {2, 2, 1}, {2, 2, 2}, {1, 2, 1}}) {
    const auto basis = tensor_basis(n, k, l);
    CHECK(BigInt(static_cast<unsigned long>(basis.size())) == tensor_basis_size(n, k, l));
    CHECK(tensor_basis_size(n, k, l) == group_order(n + k - l) * group_order(n) / group_order(n - l));
    CHECK(std::is_sorted(basis.begin(), basis.end()));
    CHECK(std::adjacent_find(basis.begin(), basis.end()) == basis.end());
  }
}

TEST_CASE("tensor basis with l = 0 is the ambient group") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}}) {
    const auto basis = tensor_basis(n, k, 0);
    const auto group = enumerate_group(n + k);
    REQUIRE(basis.size() == group.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(basis[i].left == group[i]);
      CHECK(basis[i].right().is_identity());
    }
  }
}

TEST_CASE("empty hom spaces are rejected") {
  CHECK_THROWS_AS(tensor_basis(1, 2, 2), EmptyHomSpace);
  CHECK_THROWS_AS(end_ind_res_basis(0, 1, 1), EmptyHomSpace);
  CHECK_THROWS_AS(end_ind_res_basis(1, 3, 2), EmptyHomSpace);
}

TEST_CASE("conjugation action on tensors") {
  const auto basis = tensor_basis(1, 1, 1);
  for (const auto& t : basis) CHECK(conj_action_tensor(identity(1), t, 1, 1, 1) == t);
  const auto& e_e = basis.front();
  CHECK(e_e.left.is_identity());
  CHECK(e_e.right().is_identity());
  CHECK(conj_action_tensor(beta(1, 1), e_e, 1, 1, 1) == e_e);
}

TEST_CASE("conjugation by A_{n-l} is a group action") {
  for (auto [n, k, l] : std::vector<std::tuple<int, int, int>>{{1, 1, 1}, {2, 1, 1}, {2, 2, 1}, {1, 1, 0}}) {
    const auto check = tensor_action_is_group_action(n, k, l, n - l);
    CHECK(check.is_action);
    CHECK(check.checks > 0);
  }
}

TEST_CASE("the full A_n formula is not a group action at (2,1,1)") {
  const auto literal = tensor_action_is_group_action(2, 1, 1, 2);
  CHECK_FALSE(literal.is_action);
  CHECK(literal.witness.has_value());
}

TEST_CASE("End dimensions match the bimodule oracle") {
  for (auto [n, k, l] : std::vector<std::tuple<int, int, int>>{
           {1, 1, 0}, {2, 1, 0}, {1, 2, 0}, {1, 1, 1}, {2, 1, 1}, {2, 2, 1}, {2, 2, 2}, {1, 2, 1}}) {
    CAPTURE(n);
    CAPTURE(k);
    CAPTURE(l);
    const auto e = end_ind_res_basis(n, k, l);
    CHECK(e.dimension == bimodule_end_dimension(n, k, l));
    CHECK(e.dimension == e.orbits.size());
    CHECK(e.index_set_changes == 0);
    std::set<TensorBasisElement> support;
    std::size_t total = 0;
    for (const auto& o : e.orbits) {
      total += o.size();
      support.insert(o.begin(), o.end());
    }
    CHECK(support.size() == total);
    CHECK(total == e.tensor_basis_size);
  }
  CHECK(end_ind_res_basis(1, 1, 1).dimension == 4);
}

TEST_CASE("l = 0 end basis equals the centralizer-algebra basis") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}}) {
    const auto e = end_ind_res_basis(n, k, 0);
    auto expected = centralizer_algebra_basis(n, k);
    auto got = e.algebra_vectors;
    auto key = [](const AlgebraElement& x) { return x.terms().begin()->first; };
    std::sort(expected.begin(), expected.end(), [&](auto& a, auto& b) { return key(a) < key(b); });
    std::sort(got.begin(), got.end(), [&](auto& a, auto& b) { return key(a) < key(b); });
    CHECK(got == expected);
  }
  CHECK(end_ind_res_basis(1, 1, 0).dimension == 6);
}

TEST_CASE("D generators") {
  const auto d12 = d_generators(1, 2);
  REQUIRE(d12.size() == 2);
  CHECK(d12[0].element == AlgebraElement::basis(oracle::elem(2, "(3 4)")));
  CHECK(d12[1].element == orbit_sum(beta(2, 2), SubgroupSpec::embedded(1)));

  std::vector<std::string> labels;
  for (const auto& g : d_generators(2, 4)) labels.push_back(g.label);
  CHECK(labels == std::vector<std::string>{"beta_1^(0)", "beta_2^(0)", "beta_1^(1)", "beta_2^(1)",
                                           "beta_3^(1)", "o_2(beta_3)", "o_2(beta_4)",
                                           "o_2(beta_4 beta_3)"});
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}})
    for (const auto& g : d_generators(n, m)) CHECK(centralizes(g.element, SubgroupSpec::embedded(n)));
}

TEST_CASE("o_n(beta_{n+1}) commutes with hat(A_n)") {
  for (int n = 1; n <= 2; ++n) {
    const auto o = orbit_sum(beta(n + 1, n + 1), SubgroupSpec::embedded(n));
    for (const auto& g : generators(SubgroupSpec::hat(n), n + 1))
      CHECK(commutator(o, AlgebraElement::basis(g)).is_zero());
  }
}

TEST_CASE("orbit of beta_{n+1} is stable and its sum is central") {
  for (int n = 1; n <= 3; ++n) {
    const auto b = beta(n + 1, n + 1);
    CHECK(orbit(b, SubgroupSpec::embedded(n)).elements == orbit(b, SubgroupSpec::full()).elements);
    CHECK(centralizes(orbit_sum(b, SubgroupSpec::embedded(n)), SubgroupSpec::full()));
  }
}

TEST_CASE("spanning by class sums times D") {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}}) {
    const auto s = spanning_check(n, m);
    CHECK(s.generators_centralize);
    CHECK(s.spans);
    CHECK(s.product_rank == s.centralizer_dimension);
  }
  const auto s23 = spanning_check(2, 3);
  CHECK(s23.class_sums == 5);
  CHECK(s23.centralizer_dimension == 48);
  CHECK_FALSE(s23.dimensions_multiply);
}

TEST_CASE("power table") {
  const auto rows = power_table(1, 7);
  REQUIRE(rows.size() == 7);
  const auto o = rows[0].value;
  CHECK(o == orbit_sum(beta(2, 2), SubgroupSpec::embedded(1)));
  AlgebraElement sq(2);
  sq.add_term(identity(2), 2);
  sq.add_term(oracle::elem(2, "(1 2)(3 4)"), 2);
  CHECK(rows[1].value == sq);
  CHECK_FALSE(rows[1].asserted);
  CHECK(rows[2].value == Rational(4) * o);
  CHECK(rows[4].value == Rational(16) * o);
  for (const auto& r : rows) {
    CHECK(r.asserted == (r.k % 2 == 1));
    if (r.asserted) CHECK(r.holds);
  }
  for (const auto& r : power_table(2, 3)) CHECK_FALSE(r.asserted);
}

TEST_CASE("opposite algebra") {
  const auto trivial = opposite_check(1, 0);
  CHECK(trivial.transposed);
  CHECK(trivial.commutative);
  const auto o = opposite_check(1, 1);
  CHECK(o.transposed);
  CHECK(o.ind_dimension == 6);
  CHECK(o.res_dimension == 6);
  CHECK(o.triples == 216);
  CHECK(opposite_check(2, 1).transposed);
}
