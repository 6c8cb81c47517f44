#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wreath/algebra.hpp"
#include "wreath/subgroup.hpp"
#include "wreath/tree_automorphism.hpp"

namespace wreath {

/// |A_n| = 2^{2^n - 1}.
BigInt group_order(int n);

/// c_0 = 1, c_n = c_{n-1}(3 + c_{n-1}) / 2. No enumeration.
BigInt class_count(int n);

/// Brute-force center of A_n: elements commuting with every beta_i. n <= 4.
std::vector<TreeAutomorphism> center(int n);
/// {e, (1 2)(3 4)...(2^n - 1, 2^n)}.
std::vector<TreeAutomorphism> center_closed_form(int n);

/// Brute-force centralizer of the embedded A_n inside A_{n+k}. n + k <= 4.
std::vector<TreeAutomorphism> group_centralizer(int n, int k);
/// Z(A_n) hat(A_n) inside A_{n+1}, in canonical order.
std::vector<TreeAutomorphism> centralizer_closed_form(int n);

/// Partition of A_ambient into conjugation orbits of an acting subgroup.
struct OrbitDecomposition {
  SubgroupSpec acting = SubgroupSpec::trivial();
  int ambient = 0;
  std::vector<Orbit> orbits;           // ordered by representative
  std::vector<std::uint32_t> orbit_of; // indexed by swap word

  std::size_t count() const { return orbits.size(); }
  std::size_t total_size() const;
  const Orbit& orbit_containing(const TreeAutomorphism& g) const {
    return orbits[orbit_of[g.word()]];
  }
};

/// Union-find over the conjugation graph of the acting subgroup's generators. Requires
/// A_ambient to be enumerable.
OrbitDecomposition orbit_partition(int ambient, const SubgroupSpec& acting);

/// Classes of A_n under full conjugation. n <= 4.
OrbitDecomposition conjugacy_classes(int n);

/// Orbits of A_{n+k} under conjugation by the embedded A_n. n + k <= 4.
OrbitDecomposition orbit_decomposition(int n, int k);

/// Orbit counts for A_n acting on A_{n+k}, k >= 1.
struct OrbitCountPrediction {
  /// |A_n| |A_{n+1}| ... |A_{n+k-1}| (c_n + 2^k - 1); reduces to |A_n|(c_n + 1) at k = 1.
  BigInt corrected;
  /// |A_n| ... |A_{n+k-1}| (c_n + a_{k-1}) with a_0 = 0, a_r = 2a_{r-1} + 1.
  BigInt literal;
};
OrbitCountPrediction predicted_orbit_count(int n, int k);

/// An orbit named as C_n(g) h or O_n(beta_I) h with h in hat(A_n) ... hat(A_{n+k-1}).
struct OrbitLabel {
  enum class Kind { Class, BetaOrbit };
  Kind kind = Kind::Class;
  TreeAutomorphism seed;    // class representative g, or beta_{i_s} ... beta_{i_1}
  std::vector<int> indices; // I for BetaOrbit
  TreeAutomorphism hat;     // h
  std::uint32_t orbit = 0;  // index into the decomposition
};

struct StructuredLabeling {
  std::vector<OrbitLabel> labels;
  /// Every labelled set is exactly one orbit.
  bool labels_are_orbits = true;
  /// No two labels name the same orbit and every orbit is named.
  bool bijective = true;
  std::optional<std::string> witness;
};

StructuredLabeling structured_labeling(const OrbitDecomposition& d, int n, int k);

enum class CosetKind { Right, Double };

struct CosetSystem {
  int ambient = 0;
  int base = 0;
  CosetKind kind = CosetKind::Right;
  std::vector<TreeAutomorphism> representatives;
  std::vector<std::size_t> sizes;
  bool disjoint = true;
  bool covers = true;
  /// First element found twice, or first element missed.
  std::optional<TreeAutomorphism> witness;

  std::size_t total_size() const;
};

/// Right cosets A_n r of A_n in A_{n+l+1} for r = chain * beta_I. n + l + 1 <= 4.
CosetSystem right_coset_reps(int n, int l);

/// The double coset A_n g A_n inside A_{n+1}, in canonical order.
std::vector<TreeAutomorphism> double_coset(int n, const TreeAutomorphism& g);

/// (A_n, A_n) double cosets of A_{n+1} with representatives hat(A_n) and beta_{n+1}. n <= 3.
CosetSystem double_cosets(int n);

/// Orbit sums of orbit_decomposition(n, k), one per orbit, in orbit order.
std::vector<AlgebraElement> centralizer_algebra_basis(int n, int k);

/// Coordinates of x in the orbit-sum basis of d, or nothing when x is not constant on
/// some orbit of d.
std::optional<std::vector<Rational>> expand_in_orbit_basis(const AlgebraElement& x,
                                                           const OrbitDecomposition& d);

struct ClosureReport {
  std::size_t dimension = 0;
  std::size_t products = 0;
  bool closed = true;
  std::optional<std::string> witness;
};

/// Multiplies every ordered pair of orbit sums and re-expands the product in the basis.
ClosureReport check_basis_closure(int n, int k);

struct RelationInstance {
  int family = 1;  // 1: b_i^2, 2: (b_i b_j)^4, 3: (b_i b_j b_i b_{j+k})^2
  int i = 0;
  int j = 0;
  int k = 0;
  /// The element raised to the power, in cycle notation.
  std::string base;
  bool holds = false;
};

struct PresentationReport {
  int level = 0;
  /// Evaluated instances with beta_i as in the treegroup module.
  std::vector<RelationInstance> instances;
  /// Relation (3) instances with j + k > n: no beta_{j+k} exists in A_n.
  std::vector<RelationInstance> untestable;
  /// The same families with generators indexed from the root (beta'_i = beta_{n+1-i}).
  std::vector<RelationInstance> root_first;

  bool all_hold() const;
  bool root_first_all_hold() const;
  const RelationInstance* first_failure() const;
};

/// Evaluates the three relation families in the permutation representation. n <= 6.
PresentationReport check_presentation(int n);

}  // namespace wreath
