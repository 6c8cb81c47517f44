#pragma once

#include <cstddef>
#include <vector>

#include "wreath/algebra.hpp"
#include "wreath/tree_automorphism.hpp"

namespace wreath {

/// {x in A_n : x in g A_n g^{-1}} for g in A_{n+1}, computed exhaustively. n <= 3.
std::vector<TreeAutomorphism> conjugate_intersection(int n, const TreeAutomorphism& g);

enum class SummandType { Id, Ind0Res0, Other };

const char* summand_type_name(SummandType t);

/// One Mackey summand of Res Ind for A_n < A_{n+1}, indexed by a double coset.
struct MackeySummand {
  TreeAutomorphism rep;
  std::vector<TreeAutomorphism> intersection;  // elements of A_n, at level n + 1
  std::size_t double_coset_size = 0;
  BigInt dimension;  // |A_n|^2 / |intersection|
  SummandType type = SummandType::Other;
};

struct MackeyReport {
  int level = 0;
  std::vector<MackeySummand> summands;
  std::size_t id_summands = 0;
  std::size_t trivial_summands = 0;
  BigInt total_dimension;
  BigInt ambient_order;
  /// |A_n| Id summands and exactly one Ind0Res0 summand.
  bool census_ok = false;
  /// Dimensions equal double-coset sizes and sum to |A_{n+1}|.
  bool audit_ok = false;
  /// A_n b A_n = b A_n for every b in hat(A_n).
  bool hat_cosets_regular = false;

  bool ok() const { return census_ok && audit_ok && hat_cosets_regular; }
};

/// One summand per double coset of double_cosets(n). 1 <= n <= 3.
MackeyReport mackey_decomposition(int n);

}  // namespace wreath
