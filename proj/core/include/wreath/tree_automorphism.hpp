#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wreath/permutation.hpp"

namespace wreath {

/// Deepest tree a swap word can describe: 2^6 - 1 = 63 internal nodes fit in one 64-bit word.
inline constexpr int kMaxLevel = 6;

/// Number of internal nodes of the complete binary tree T_n.
constexpr std::size_t node_count(int level) { return (std::size_t{1} << level) - 1; }

/// Breadth-first index of the node at `position` (0-based, left to right) on `depth`.
constexpr std::size_t node_index(int depth, std::size_t position) {
  return (std::size_t{1} << depth) - 1 + position;
}

/// An element of A_n, the automorphism group of the complete binary tree T_n.
///
/// The canonical form is the swap word: one bit per internal node, indexed breadth-first
/// (root first, then left to right on each level). A set bit means the two child subtrees
/// of that node are exchanged. Internally the root occupies the most significant of the
/// 2^n - 1 used bits, so comparing `word()` values is lexicographic comparison of swap
/// words.
class TreeAutomorphism {
 public:
  TreeAutomorphism() = default;

  static TreeAutomorphism identity(int level);
  /// Packed word with bit (2^n - 2 - node) describing `node`. Throws on stray high bits.
  static TreeAutomorphism from_word(int level, std::uint64_t word);
  /// Parses a string of '0'/'1' of length 2^n - 1 (the empty string is level 0).
  static TreeAutomorphism from_swap_word(std::string_view bits);

  int level() const { return level_; }
  std::uint64_t word() const { return word_; }
  std::size_t nodes() const { return node_count(level_); }

  bool swaps(std::size_t node) const { return (word_ >> (nodes() - 1 - node)) & 1u; }
  bool is_identity() const { return word_ == 0; }

  std::string swap_word() const;
  /// Cycle notation of the leaf permutation, e.g. "(1 3)(2 4)"; identity is "e".
  std::string cycles() const;

  friend bool operator==(const TreeAutomorphism&, const TreeAutomorphism&) = default;
  /// Level first, then lexicographic swap word.
  friend auto operator<=>(const TreeAutomorphism&, const TreeAutomorphism&) = default;

 private:
  TreeAutomorphism(int level, std::uint64_t word) : level_(level), word_(word) {}

  int level_ = 0;
  std::uint64_t word_ = 0;
};

/// Word bit that stores `node` in a level-`level` swap word.
constexpr std::uint64_t node_bit(int level, std::size_t node) {
  return std::uint64_t{1} << (node_count(level) - 1 - node);
}

TreeAutomorphism identity(int level);

/// beta_i in A_n: the swap at the leftmost node at distance n - i from the root. Its leaf
/// permutation is (1, 2^{i-1}+1)(2, 2^{i-1}+2)...(2^{i-1}, 2^i).
TreeAutomorphism beta(int level, int index);

/// beta_{i_1} beta_{i_2} ... beta_{i_s} for a strictly increasing index list; empty gives e.
TreeAutomorphism beta_product(int level, const std::vector<int>& indices);

/// g after h: the leaf permutation of the result sends x to g(h(x)).
TreeAutomorphism multiply(const TreeAutomorphism& g, const TreeAutomorphism& h);
inline TreeAutomorphism operator*(const TreeAutomorphism& g, const TreeAutomorphism& h) {
  return multiply(g, h);
}

TreeAutomorphism inverse(const TreeAutomorphism& g);

/// h g h^{-1}.
TreeAutomorphism conjugate(const TreeAutomorphism& g, const TreeAutomorphism& h);

bool commute(const TreeAutomorphism& g, const TreeAutomorphism& h);

/// Leaf action. Writing g = (f_L, f_R; s) with root bit s, a left leaf i goes to
/// f_L(i) + s * 2^{n-1} and a right leaf 2^{n-1} + i goes to f_R(i) + (1 - s) * 2^{n-1}.
Permutation to_permutation(const TreeAutomorphism& g);

/// Inverse of to_permutation. Throws NotATreeAutomorphism when some node's leaf block is
/// not carried onto a block of the same node depth.
TreeAutomorphism from_permutation(int level, const Permutation& p);

/// Permutation embedding A_n -> A_{n+1}: same cycles, fixes labels 2^n + 1 .. 2^{n+1}.
TreeAutomorphism perm_embed(const TreeAutomorphism& g);
/// Repeated perm_embed up to `level` (no-op when already there).
TreeAutomorphism perm_embed_to(const TreeAutomorphism& g, int level);

/// Moves an element of the permutation-embedded A_m between ambient levels. Going down
/// throws InvalidArgument when g moves a label beyond 2^level.
TreeAutomorphism perm_relevel(const TreeAutomorphism& g, int level);

/// A_n -> hat(A_n) inside A_{n+1}: relabels k as 2^n + k.
TreeAutomorphism hat_embed(const TreeAutomorphism& g);

/// Image of every heap-indexed vertex of T_n (internal nodes and leaves) under g.
/// Entry v is the breadth-first index of g(v); the vector has 2^{n+1} - 1 entries.
std::vector<std::uint8_t> vertex_images(const TreeAutomorphism& g);

}  // namespace wreath
