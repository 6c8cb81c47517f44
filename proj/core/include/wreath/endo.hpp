#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wreath/algebra.hpp"
#include "wreath/subgroup.hpp"
#include "wreath/tree_automorphism.hpp"

namespace wreath {

/// Tensor bases above this size are refused.
inline constexpr std::size_t kMaxTensorBasis = std::size_t{1} << 16;

/// a (x)_{n-l} b beta_I inside C[A_{n+k-l}] (x)_{n-l} C[A_n].
struct TensorBasisElement {
  TreeAutomorphism left;     // level n + k - l
  TreeAutomorphism chain;    // b, level n, in hat(A_{n-l}) ... hat(A_{n-1})
  std::vector<int> indices;  // I, a subset of {n-l+1, ..., n}

  /// b * beta_I at level n.
  TreeAutomorphism right() const;

  friend bool operator==(const TensorBasisElement&, const TensorBasisElement&) = default;
  /// By left factor, then by right factor.
  friend std::strong_ordering operator<=>(const TensorBasisElement& a,
                                          const TensorBasisElement& b);
};

/// |A_{n+k-l}| |A_n| / |A_{n-l}|.
BigInt tensor_basis_size(int n, int k, int l);

/// Every pair (a, b beta_I), sorted. Throws EmptyHomSpace when l > n and InvalidArgument
/// when k < l.
std::vector<TensorBasisElement> tensor_basis(int n, int k, int l);

/// h (a (x) b beta_I) h^{-1} = a^h (x) b beta_I^h with h in A_n (level n). The right factor
/// is refactored as y b' beta_I' with y in A_{n-l}, and y moves left across the tensor.
TensorBasisElement conj_action_tensor(const TreeAutomorphism& h, const TensorBasisElement& t,
                                      int n, int k, int l);

struct ActionCheck {
  bool is_action = true;
  std::size_t checks = 0;
  std::optional<std::string> witness;
};

/// Tests act(h1 h2, t) == act(h1, act(h2, t)) for all h1, h2 in the embedded A_acting and
/// every basis element t.
ActionCheck tensor_action_is_group_action(int n, int k, int l, int acting_level);

struct EndBasis {
  int n = 0;
  int k = 0;
  int l = 0;
  SubgroupSpec acting = SubgroupSpec::trivial();
  std::size_t tensor_basis_size = 0;
  std::size_t dimension = 0;
  /// Each orbit sorted; orbits ordered by their minimum.
  std::vector<std::vector<TensorBasisElement>> orbits;
  /// Number of (h, t) with h in the acting group where refactoring changed I.
  std::size_t index_set_changes = 0;
  /// For l = 0 only: the orbit sums as elements of C[A_{n+k}].
  std::vector<AlgebraElement> algebra_vectors;
};

/// Orbit sums of the conjugation action of A_{n-l} on tensor_basis(n, k, l).
EndBasis end_ind_res_basis(int n, int k, int l);

struct DGenerator {
  enum class Family { HatSwap, OrbitSum };
  Family family = Family::HatSwap;
  int ell = 0;              // HatSwap: generator of hat(A_{n+ell})
  int index = 0;            // HatSwap: beta_index of that copy
  std::vector<int> tuple;   // OrbitSum: j_1 < ... < j_s, summed element beta_{j_s} ... beta_{j_1}
  TreeAutomorphism seed;
  AlgebraElement element;
  std::string label;
};

/// Generators of D_{n,m} inside C[A_m]. 1 <= n < m <= 4.
std::vector<DGenerator> d_generators(int n, int m);

struct SpanningReport {
  int n = 0;
  int m = 0;
  std::size_t centralizer_dimension = 0;
  std::size_t d_dimension = 0;
  std::size_t class_sums = 0;
  std::size_t product_rank = 0;
  /// Every D generator centralizes the embedded A_n.
  bool generators_centralize = true;
  /// Class sums of A_n times D span Z(C[A_m], C[A_n]).
  bool spans = false;
  /// c_n * dim D equals the centralizer dimension.
  bool dimensions_multiply = false;
};

/// End_n(Id) (x) D_{n,m} as a spanning statement. 1 <= n < m <= 3.
SpanningReport spanning_check(int n, int m);

struct PowerRow {
  int k = 0;
  AlgebraElement value;
  bool asserted = false;  // only n = 1 with k odd
  bool holds = true;      // value == 2^{k-1} o when asserted
};

/// Powers of o_n(beta_{n+1}) in C[A_{n+1}]. n <= 3, max_k <= 16.
std::vector<PowerRow> power_table(int n, int max_k);

struct OppositeReport {
  int n = 0;
  int k = 0;
  std::size_t ind_dimension = 0;
  std::size_t res_dimension = 0;
  std::size_t triples = 0;
  bool transposed = true;  // c_{ab}^g(Res) == c_{ba}^g(Ind) for all a, b, g
  bool commutative = true;
  std::optional<std::string> witness;
};

/// Compares right-multiplication (Ind) and left-multiplication (Res) operator algebras on
/// the orbit-sum basis of Z(C[A_{n+k}], C[A_n]). n + k <= 3.
OppositeReport opposite_check(int n, int k);

}  // namespace wreath
