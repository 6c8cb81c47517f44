#include "wreath/subgroup.hpp"

#include <algorithm>
#include <bit>

#include "wreath/error.hpp"

namespace wreath {

namespace {

// Internal nodes of the height-`height` subtree whose root sits at (depth, position).
std::uint64_t subtree_mask(int ambient, int depth, std::size_t position, int height) {
  std::uint64_t mask = 0;
  for (int t = 0; t < height; ++t) {
    const std::size_t width = std::size_t{1} << t;
    for (std::size_t p = 0; p < width; ++p)
      mask |= node_bit(ambient, node_index(depth + t, position * width + p));
  }
  return mask;
}

void subtree_generators(int ambient, int depth, std::size_t position, int height,
                        std::vector<TreeAutomorphism>& out) {
  // Deepest row first so generator i is beta_i of the subtree.
  for (int t = height - 1; t >= 0; --t) {
    const std::size_t leftmost = node_index(depth + t, position << t);
    out.push_back(TreeAutomorphism::from_word(ambient, node_bit(ambient, leftmost)));
  }
}

struct Subtree {
  int depth;
  std::size_t position;
  int height;
};

std::vector<Subtree> subtrees(const SubgroupSpec& spec, int ambient) {
  if (ambient < 0 || ambient > kMaxLevel)
    throw LevelTooLarge("ambient level " + std::to_string(ambient) + " outside 0.." +
                        std::to_string(kMaxLevel));
  if (spec.min_ambient() > ambient)
    throw InvalidArgument(spec.name() + " does not fit inside A_" + std::to_string(ambient));
  std::vector<Subtree> out;
  switch (spec.kind()) {
    case SubgroupSpec::Kind::Trivial:
      break;
    case SubgroupSpec::Kind::Full:
      out.push_back({0, 0, ambient});
      break;
    case SubgroupSpec::Kind::Embedded:
      out.push_back({ambient - spec.first(), 0, spec.first()});
      break;
    case SubgroupSpec::Kind::Hat:
    case SubgroupSpec::Kind::HatChain:
      // hat(A_m) hangs off the right child of the leftmost node at depth ambient - m - 1.
      for (int m = spec.first(); m <= spec.last(); ++m) out.push_back({ambient - m, 1, m});
      break;
  }
  return out;
}

}  // namespace

SubgroupSpec SubgroupSpec::embedded(int m) {
  if (m < 0) throw InvalidArgument("embedded level must be >= 0");
  return {Kind::Embedded, m, m};
}

SubgroupSpec SubgroupSpec::hat(int m) {
  if (m < 0) throw InvalidArgument("hat level must be >= 0");
  return {Kind::Hat, m, m};
}

SubgroupSpec SubgroupSpec::hat_chain(int first, int last) {
  if (first < 0 || last < first)
    throw InvalidArgument("hat chain indices must satisfy 0 <= first <= last");
  return {Kind::HatChain, first, last};
}

int SubgroupSpec::min_ambient() const {
  switch (kind_) {
    case Kind::Trivial:
    case Kind::Full:
      return 0;
    case Kind::Embedded:
      return first_;
    case Kind::Hat:
    case Kind::HatChain:
      return last_ + 1;
  }
  return 0;
}

std::string SubgroupSpec::name() const {
  switch (kind_) {
    case Kind::Trivial:
      return "trivial";
    case Kind::Full:
      return "full";
    case Kind::Embedded:
      return "A_" + std::to_string(first_);
    case Kind::Hat:
      return "hatA_" + std::to_string(first_);
    case Kind::HatChain:
      return "hatA_" + std::to_string(first_) + "..hatA_" + std::to_string(last_);
  }
  return {};
}

std::uint64_t node_mask(const SubgroupSpec& spec, int ambient) {
  std::uint64_t mask = 0;
  for (const auto& s : subtrees(spec, ambient))
    mask |= subtree_mask(ambient, s.depth, s.position, s.height);
  return mask;
}

int order_log2(const SubgroupSpec& spec, int ambient) {
  return std::popcount(node_mask(spec, ambient));
}

bool contains(const SubgroupSpec& spec, const TreeAutomorphism& g) {
  return (g.word() & ~node_mask(spec, g.level())) == 0;
}

std::vector<TreeAutomorphism> generators(const SubgroupSpec& spec, int ambient) {
  std::vector<TreeAutomorphism> out;
  for (const auto& s : subtrees(spec, ambient))
    subtree_generators(ambient, s.depth, s.position, s.height, out);
  return out;
}

std::vector<TreeAutomorphism> enumerate(const SubgroupSpec& spec, int ambient) {
  const std::uint64_t mask = node_mask(spec, ambient);
  const int bits = std::popcount(mask);
  if (bits > kMaxEnumerationLog2)
    throw LevelTooLarge(spec.name() + " in A_" + std::to_string(ambient) + " has 2^" +
                        std::to_string(bits) + " elements; enumeration is capped at 2^" +
                        std::to_string(kMaxEnumerationLog2));
  std::vector<TreeAutomorphism> out;
  out.reserve(std::size_t{1} << bits);
  // Submasks of `mask` in increasing numeric order.
  std::uint64_t s = 0;
  do {
    out.push_back(TreeAutomorphism::from_word(ambient, s));
    s = (s - mask) & mask;
  } while (s != 0);
  return out;
}

std::vector<TreeAutomorphism> enumerate_group(int level) {
  return enumerate(SubgroupSpec::full(), level);
}

std::uint64_t rank_in(std::uint64_t mask, const TreeAutomorphism& g) {
  // Compress the masked bits (a software pext).
  std::uint64_t rank = 0;
  int out = 0;
  for (std::uint64_t m = mask; m != 0; m &= m - 1) {
    const std::uint64_t bit = m & (~m + 1);
    if (g.word() & bit) rank |= std::uint64_t{1} << out;
    ++out;
  }
  return rank;
}

Factorization factorize(const TreeAutomorphism& g, int base_level) {
  const int ambient = g.level();
  if (base_level < 0 || base_level >= ambient)
    throw InvalidArgument("base level " + std::to_string(base_level) +
                          " must lie below the element level " + std::to_string(ambient));
  const int offset = ambient - base_level - 1;

  // Peel beta_i off the right from the root down: with every shallower spine swap already
  // removed, the spine node at depth ambient - i swaps iff i belongs to I.
  Factorization f;
  auto rest = g;
  for (int i = ambient; i > base_level; --i) {
    if (rest.swaps(node_index(ambient - i, 0))) {
      rest = multiply(rest, beta(ambient, i));
      f.indices.push_back(i);
    }
  }
  std::reverse(f.indices.begin(), f.indices.end());

  // The remainder has no spine swaps, so it splits along disjoint subtrees.
  const std::uint64_t base_mask = node_mask(SubgroupSpec::embedded(base_level), ambient);
  f.base = TreeAutomorphism::from_word(ambient, rest.word() & base_mask);
  std::uint64_t covered = base_mask;
  for (int j = 0; j <= offset; ++j) {
    const std::uint64_t m = node_mask(SubgroupSpec::hat(base_level + j), ambient);
    f.hats.push_back(TreeAutomorphism::from_word(ambient, rest.word() & m));
    covered |= m;
  }
  if ((rest.word() & ~covered) != 0)
    throw Error("factorize: residual swaps outside A_n hat chain (internal error)");
  return f;
}

TreeAutomorphism recompose(const Factorization& f) {
  auto result = f.base;
  for (const auto& h : f.hats) result = multiply(result, h);
  return multiply(result, beta_product(f.base.level(), f.indices));
}

std::vector<std::vector<int>> index_subsets(int first, int last) {
  std::vector<std::vector<int>> out;
  const int count = std::max(0, last - first + 1);
  for (std::uint32_t s = 0; s < (1u << count); ++s) {
    std::vector<int> subset;
    for (int i = 0; i < count; ++i)
      if (s & (1u << i)) subset.push_back(first + i);
    out.push_back(std::move(subset));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<CosetRep> coset_representatives(int base_level, int offset) {
  if (base_level < 0 || offset < -1)
    throw InvalidArgument("coset representatives need base >= 0 and offset >= -1");
  const int ambient = base_level + offset + 1;
  std::vector<CosetRep> out;
  if (offset == -1) {
    out.push_back({identity(ambient), {}, identity(ambient)});
    return out;
  }
  const auto chain = enumerate(SubgroupSpec::hat_chain(base_level, base_level + offset), ambient);
  const auto subsets = index_subsets(base_level + 1, ambient);
  out.reserve(chain.size() * subsets.size());
  for (const auto& c : chain)
    for (const auto& I : subsets) out.push_back({c, I, multiply(c, beta_product(ambient, I))});
  std::sort(out.begin(), out.end(),
            [](const CosetRep& a, const CosetRep& b) { return a.element < b.element; });
  return out;
}

}  // namespace wreath
