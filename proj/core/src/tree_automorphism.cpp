#include "wreath/tree_automorphism.hpp"

#include <array>

#include "wreath/error.hpp"

namespace wreath {

namespace {

void check_level(int level) {
  if (level < 0 || level > kMaxLevel)
    throw LevelTooLarge("tree level " + std::to_string(level) + " outside 0.." +
                        std::to_string(kMaxLevel));
}

// Heap images of all vertices down to the leaves; children of u are 2u+1 and 2u+2.
// Sized for kMaxLevel (127 vertices).
using VertexMap = std::array<std::uint8_t, 128>;

void fill_vertex_images(const TreeAutomorphism& g, VertexMap& img) {
  const std::size_t internal = g.nodes();
  img[0] = 0;
  for (std::size_t v = 0; v < internal; ++v) {
    const unsigned s = g.swaps(v) ? 1u : 0u;
    img[2 * v + 1] = static_cast<std::uint8_t>(2 * img[v] + 1 + s);
    img[2 * v + 2] = static_cast<std::uint8_t>(2 * img[v] + 2 - s);
  }
}

// Internal-node images only.
void fill_node_images(const TreeAutomorphism& g, VertexMap& img) {
  const std::size_t internal = g.nodes();
  if (internal == 0) return;
  img[0] = 0;
  const std::size_t parents = internal / 2;  // nodes whose children are internal
  for (std::size_t v = 0; v < parents; ++v) {
    const unsigned s = g.swaps(v) ? 1u : 0u;
    img[2 * v + 1] = static_cast<std::uint8_t>(2 * img[v] + 1 + s);
    img[2 * v + 2] = static_cast<std::uint8_t>(2 * img[v] + 2 - s);
  }
}

int depth_of(std::size_t node) {
  int d = 0;
  while (node + 1 >= (std::size_t{2} << d)) ++d;
  return d;
}

}  // namespace

TreeAutomorphism TreeAutomorphism::identity(int level) {
  check_level(level);
  return TreeAutomorphism(level, 0);
}

TreeAutomorphism TreeAutomorphism::from_word(int level, std::uint64_t word) {
  check_level(level);
  const std::size_t n = node_count(level);
  if (n < 64 && (word >> n) != 0)
    throw InvalidArgument("swap word has bits beyond " + std::to_string(n) + " nodes");
  return TreeAutomorphism(level, word);
}

TreeAutomorphism TreeAutomorphism::from_swap_word(std::string_view bits) {
  int level = 0;
  while (node_count(level) < bits.size() && level <= kMaxLevel) ++level;
  if (level > kMaxLevel || node_count(level) != bits.size())
    throw InvalidArgument("swap word length " + std::to_string(bits.size()) +
                          " is not 2^n - 1 for n <= " + std::to_string(kMaxLevel));
  std::uint64_t word = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw InvalidArgument("swap word must contain only 0 and 1");
    word = (word << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return TreeAutomorphism(level, word);
}

std::string TreeAutomorphism::swap_word() const {
  std::string out(nodes(), '0');
  for (std::size_t v = 0; v < nodes(); ++v)
    if (swaps(v)) out[v] = '1';
  return out;
}

std::string TreeAutomorphism::cycles() const { return to_permutation(*this).cycle_notation(); }

TreeAutomorphism identity(int level) { return TreeAutomorphism::identity(level); }

TreeAutomorphism beta(int level, int index) {
  check_level(level);
  if (index < 1 || index > level)
    throw IndexOutOfRange("beta index " + std::to_string(index) + " outside 1.." +
                          std::to_string(level));
  return TreeAutomorphism::from_word(level, node_bit(level, node_index(level - index, 0)));
}

TreeAutomorphism beta_product(int level, const std::vector<int>& indices) {
  auto result = identity(level);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i > 0 && indices[i] <= indices[i - 1])
      throw InvalidArgument("beta_product indices must be strictly increasing");
    result = multiply(result, beta(level, indices[i]));
  }
  return result;
}

TreeAutomorphism multiply(const TreeAutomorphism& g, const TreeAutomorphism& h) {
  if (g.level() != h.level()) throw LevelMismatch(g.level(), h.level());
  // Node v of g*h swaps iff h swaps at v xor g swaps where h carried v.
  VertexMap img;
  fill_node_images(h, img);
  const int n = g.level();
  std::uint64_t word = 0;
  for (std::size_t v = 0; v < g.nodes(); ++v)
    if (h.swaps(v) != g.swaps(img[v])) word |= node_bit(n, v);
  return TreeAutomorphism::from_word(n, word);
}

TreeAutomorphism inverse(const TreeAutomorphism& g) {
  VertexMap img;
  fill_node_images(g, img);
  const int n = g.level();
  std::uint64_t word = 0;
  for (std::size_t v = 0; v < g.nodes(); ++v)
    if (g.swaps(v)) word |= node_bit(n, img[v]);
  return TreeAutomorphism::from_word(n, word);
}

TreeAutomorphism conjugate(const TreeAutomorphism& g, const TreeAutomorphism& h) {
  return multiply(multiply(h, g), inverse(h));
}

bool commute(const TreeAutomorphism& g, const TreeAutomorphism& h) {
  return multiply(g, h) == multiply(h, g);
}

std::vector<std::uint8_t> vertex_images(const TreeAutomorphism& g) {
  VertexMap img;
  fill_vertex_images(g, img);
  const std::size_t total = 2 * g.nodes() + 1;
  return {img.begin(), img.begin() + static_cast<std::ptrdiff_t>(total)};
}

Permutation to_permutation(const TreeAutomorphism& g) {
  VertexMap img;
  fill_vertex_images(g, img);
  const std::size_t internal = g.nodes();
  const std::size_t leaves = internal + 1;
  std::vector<std::uint32_t> images(leaves);
  for (std::size_t i = 0; i < leaves; ++i)
    images[i] = static_cast<std::uint32_t>(img[internal + i] - internal + 1);
  return Permutation::from_images(std::move(images));
}

TreeAutomorphism from_permutation(int level, const Permutation& p) {
  check_level(level);
  const std::size_t leaves = std::size_t{1} << level;
  if (p.degree() != leaves)
    throw InvalidArgument("permutation degree " + std::to_string(p.degree()) +
                          " does not match 2^" + std::to_string(level));

  // Each vertex owns a contiguous block of leaves; p must carry it onto another block
  // of the same depth. Record the image vertex, then read swap bits off the children.
  const std::size_t internal = node_count(level);
  std::vector<std::size_t> img(2 * internal + 1);
  for (std::size_t v = 0; v < img.size(); ++v) {
    const int d = depth_of(v);
    const std::size_t width = leaves >> d;
    const std::size_t first = (v - node_index(d, 0)) * width;  // 0-based first leaf
    const std::size_t target = (p(static_cast<std::uint32_t>(first + 1)) - 1) / width;
    for (std::size_t j = 0; j < width; ++j) {
      if ((p(static_cast<std::uint32_t>(first + j + 1)) - 1) / width != target)
        throw NotATreeAutomorphism(p.cycle_notation() + " splits the leaf block of node " +
                                   std::to_string(v));
    }
    img[v] = node_index(d, target);
  }

  std::uint64_t word = 0;
  for (std::size_t v = 0; v < internal; ++v) {
    const bool swapped = img[2 * v + 1] == 2 * img[v] + 2;
    if (swapped) word |= node_bit(level, v);
  }
  auto g = TreeAutomorphism::from_word(level, word);
  if (to_permutation(g) != p)
    throw NotATreeAutomorphism(p.cycle_notation() + " is not induced by a tree automorphism");
  return g;
}

TreeAutomorphism perm_embed(const TreeAutomorphism& g) {
  const int n = g.level();
  check_level(n + 1);
  std::uint64_t word = 0;
  for (int d = 0; d < n; ++d)
    for (std::size_t p = 0; p < (std::size_t{1} << d); ++p)
      if (g.swaps(node_index(d, p))) word |= node_bit(n + 1, node_index(d + 1, p));
  return TreeAutomorphism::from_word(n + 1, word);
}

TreeAutomorphism perm_embed_to(const TreeAutomorphism& g, int level) {
  if (level < g.level())
    throw InvalidArgument("cannot embed level " + std::to_string(g.level()) + " into level " +
                          std::to_string(level));
  auto result = g;
  while (result.level() < level) result = perm_embed(result);
  return result;
}

TreeAutomorphism perm_relevel(const TreeAutomorphism& g, int level) {
  check_level(level);
  const int n = g.level();
  if (level >= n) return perm_embed_to(g, level);
  const int shift = n - level;
  std::uint64_t word = 0;
  for (int d = 0; d < n; ++d)
    for (std::size_t p = 0; p < (std::size_t{1} << d); ++p) {
      if (!g.swaps(node_index(d, p))) continue;
      if (d < shift || p >= (std::size_t{1} << (d - shift)))
        throw InvalidArgument(g.cycles() + " does not lie in A_" + std::to_string(level));
      word |= node_bit(level, node_index(d - shift, p));
    }
  return TreeAutomorphism::from_word(level, word);
}

TreeAutomorphism hat_embed(const TreeAutomorphism& g) {
  const int n = g.level();
  check_level(n + 1);
  std::uint64_t word = 0;
  for (int d = 0; d < n; ++d) {
    const std::size_t width = std::size_t{1} << d;
    for (std::size_t p = 0; p < width; ++p)
      if (g.swaps(node_index(d, p))) word |= node_bit(n + 1, node_index(d + 1, width + p));
  }
  return TreeAutomorphism::from_word(n + 1, word);
}

}  // namespace wreath
