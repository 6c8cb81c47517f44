#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wreath/tree_automorphism.hpp"

namespace wreath {

/// Enumeration is refused for subgroups with more than 2^15 elements (all of A_4).
inline constexpr int kMaxEnumerationLog2 = 15;

/// A named standard subgroup of A_n.
///
/// Every variant is the full automorphism group of a union of subtrees of T_n, so its
/// elements are exactly the swap words supported on a fixed node mask.
class SubgroupSpec {
 public:
  enum class Kind { Trivial, Full, Embedded, Hat, HatChain };

  static SubgroupSpec trivial() { return {Kind::Trivial, 0, 0}; }
  static SubgroupSpec full() { return {Kind::Full, 0, 0}; }
  /// Permutation-embedded A_m.
  static SubgroupSpec embedded(int m);
  /// hat(A_m): the copy of A_m on labels 2^m + 1 .. 2^{m+1}.
  static SubgroupSpec hat(int m);
  /// hat(A_first) hat(A_first+1) ... hat(A_last).
  static SubgroupSpec hat_chain(int first, int last);

  Kind kind() const { return kind_; }
  int first() const { return first_; }
  int last() const { return last_; }

  /// Smallest ambient level that contains this subgroup (Full and Trivial report 0).
  int min_ambient() const;

  /// "A_2", "hatA_1", "hatA_1..hatA_3", "trivial", "full".
  std::string name() const;

  friend bool operator==(const SubgroupSpec&, const SubgroupSpec&) = default;

 private:
  SubgroupSpec(Kind kind, int first, int last) : kind_(kind), first_(first), last_(last) {}

  Kind kind_;
  int first_;
  int last_;
};

/// Swap-word bits the subgroup may set inside A_ambient. Throws InvalidArgument when the
/// subgroup does not fit.
std::uint64_t node_mask(const SubgroupSpec& spec, int ambient);

/// log2 of the subgroup order (every standard subgroup has order a power of two).
int order_log2(const SubgroupSpec& spec, int ambient);

bool contains(const SubgroupSpec& spec, const TreeAutomorphism& g);

/// Leftmost swap on each row of each subtree; these generate the subgroup.
std::vector<TreeAutomorphism> generators(const SubgroupSpec& spec, int ambient);

/// All elements in swap-word order. Throws LevelTooLarge above 2^15 elements.
std::vector<TreeAutomorphism> enumerate(const SubgroupSpec& spec, int ambient);

/// Elements of A_n in swap-word order (guarded like enumerate).
std::vector<TreeAutomorphism> enumerate_group(int level);

/// Dense index of g inside its subgroup, i.e. its rank in enumerate() order.
std::uint64_t rank_in(std::uint64_t mask, const TreeAutomorphism& g);

/// g = base * hats[0] * ... * hats[l] * beta_I with base in A_n, hats[j] in hat(A_{n+j}),
/// I a subset of {n+1, ..., n+l+1} listed increasingly. All parts are elements of the
/// ambient level n + l + 1.
struct Factorization {
  TreeAutomorphism base;
  std::vector<TreeAutomorphism> hats;
  std::vector<int> indices;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

Factorization factorize(const TreeAutomorphism& g, int base_level);
TreeAutomorphism recompose(const Factorization& f);

/// A right coset representative of A_n in A_{n+l+1}: chain * beta_I with chain in the hat
/// chain hat(A_n)...hat(A_{n+l}).
struct CosetRep {
  TreeAutomorphism chain;
  std::vector<int> indices;
  TreeAutomorphism element;
};

/// Every chain * beta_I, ordered by element. For l = -1 this is {e} in A_n.
std::vector<CosetRep> coset_representatives(int base_level, int offset);

/// All strictly increasing subsets of first..last, ordered by size then lexicographically.
std::vector<std::vector<int>> index_subsets(int first, int last);

}  // namespace wreath
