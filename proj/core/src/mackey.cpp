#include "wreath/mackey.hpp"

#include <algorithm>

#include "wreath/error.hpp"
#include "wreath/structure.hpp"
#include "wreath/subgroup.hpp"

namespace wreath {

std::vector<TreeAutomorphism> conjugate_intersection(int n, const TreeAutomorphism& g) {
  if (n < 0 || n > 3) throw LevelTooLarge("conjugate_intersection needs 0 <= n <= 3");
  if (g.level() != n + 1) throw LevelMismatch(n + 1, g.level());
  const auto sub = SubgroupSpec::embedded(n);
  const auto g_inv = inverse(g);
  std::vector<TreeAutomorphism> out;
  // x lies in g A_n g^{-1} iff g^{-1} x g lies in A_n.
  for (const auto& x : enumerate(sub, n + 1))
    if (contains(sub, multiply(multiply(g_inv, x), g))) out.push_back(x);
  return out;
}

const char* summand_type_name(SummandType t) {
  switch (t) {
    case SummandType::Id:
      return "Id";
    case SummandType::Ind0Res0:
      return "Ind0Res0";
    case SummandType::Other:
      return "Other";
  }
  return "Other";
}

MackeyReport mackey_decomposition(int n) {
  if (n < 1 || n > 3) throw LevelTooLarge("mackey_decomposition needs 1 <= n <= 3");
  const auto cosets = double_cosets(n);
  const BigInt order = group_order(n);
  const std::size_t order_small = std::size_t{1} << node_count(n);

  MackeyReport r;
  r.level = n;
  r.ambient_order = group_order(n + 1);
  r.total_dimension = 0;
  bool sizes_match = true;
  for (std::size_t i = 0; i < cosets.representatives.size(); ++i) {
    MackeySummand s;
    s.rep = cosets.representatives[i];
    s.intersection = conjugate_intersection(n, s.rep);
    s.double_coset_size = cosets.sizes[i];
    s.dimension = order * order / BigInt(static_cast<unsigned long>(s.intersection.size()));
    if (s.intersection.size() == order_small) {
      s.type = SummandType::Id;
      ++r.id_summands;
    } else if (s.intersection.size() == 1) {
      s.type = SummandType::Ind0Res0;
      ++r.trivial_summands;
    }
    if (s.dimension != BigInt(static_cast<unsigned long>(s.double_coset_size))) sizes_match = false;
    r.total_dimension += s.dimension;
    r.summands.push_back(std::move(s));
  }
  r.census_ok = BigInt(static_cast<unsigned long>(r.id_summands)) == order &&
                r.trivial_summands == 1 && r.summands.size() == r.id_summands + 1;
  r.audit_ok = sizes_match && cosets.disjoint && cosets.covers &&
               r.total_dimension == order * order + order * order &&
               r.total_dimension == r.ambient_order;

  r.hat_cosets_regular = true;
  const auto sub = enumerate(SubgroupSpec::embedded(n), n + 1);
  for (const auto& b : enumerate(SubgroupSpec::hat(n), n + 1)) {
    std::vector<TreeAutomorphism> left;
    for (const auto& a : sub) left.push_back(multiply(b, a));
    std::sort(left.begin(), left.end());
    if (double_coset(n, b) != left) {
      r.hat_cosets_regular = false;
      break;
    }
  }
  return r;
}

}  // namespace wreath
