#include "wreath/structure.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

#include "wreath/error.hpp"

namespace wreath {

namespace {

// Largest ambient level whose whole group can be enumerated.
constexpr int kMaxEnumerableLevel = 4;

void require_enumerable(int ambient, const char* what) {
  if (ambient < 0 || ambient > kMaxEnumerableLevel)
    throw LevelTooLarge(std::string(what) + ": ambient level " + std::to_string(ambient) +
                        " outside the enumeration guard 0.." +
                        std::to_string(kMaxEnumerableLevel));
}

void require_nonnegative(int value, const char* name) {
  if (value < 0) throw InvalidArgument(std::string(name) + " must be >= 0");
}

std::vector<TreeAutomorphism> commuting_with(const std::vector<TreeAutomorphism>& candidates,
                                             const std::vector<TreeAutomorphism>& gens) {
  std::vector<TreeAutomorphism> out;
  for (const auto& g : candidates)
    if (std::all_of(gens.begin(), gens.end(), [&](const auto& s) { return commute(g, s); }))
      out.push_back(g);
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::string describe(const TreeAutomorphism& g) { return g.cycles(); }

std::string index_list(const std::vector<int>& indices) {
  std::string out = "{";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(indices[i]);
  }
  return out + "}";
}

}  // namespace

BigInt group_order(int n) {
  require_nonnegative(n, "level");
  BigInt out = 1;
  mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(), (1ul << n) - 1);
  return out;
}

BigInt class_count(int n) {
  require_nonnegative(n, "level");
  BigInt c = 1;
  for (int i = 1; i <= n; ++i) c = c * (3 + c) / 2;
  return c;
}

std::vector<TreeAutomorphism> center(int n) {
  require_enumerable(n, "center");
  return commuting_with(enumerate_group(n), generators(SubgroupSpec::full(), n));
}

std::vector<TreeAutomorphism> center_closed_form(int n) {
  require_nonnegative(n, "level");
  std::vector<TreeAutomorphism> out{identity(n)};
  if (n == 0) return out;
  std::uint64_t word = 0;
  for (std::size_t p = 0; p < (std::size_t{1} << (n - 1)); ++p)
    word |= node_bit(n, node_index(n - 1, p));
  out.push_back(TreeAutomorphism::from_word(n, word));
  return out;
}

std::vector<TreeAutomorphism> group_centralizer(int n, int k) {
  require_nonnegative(n, "n");
  require_nonnegative(k, "k");
  require_enumerable(n + k, "group_centralizer");
  return commuting_with(enumerate_group(n + k), generators(SubgroupSpec::embedded(n), n + k));
}

std::vector<TreeAutomorphism> centralizer_closed_form(int n) {
  require_nonnegative(n, "level");
  std::vector<TreeAutomorphism> out;
  for (const auto& z : center_closed_form(n))
    for (const auto& b : enumerate(SubgroupSpec::hat(n), n + 1))
      out.push_back(multiply(perm_embed(z), b));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t OrbitDecomposition::total_size() const {
  std::size_t total = 0;
  for (const auto& o : orbits) total += o.elements.size();
  return total;
}

OrbitDecomposition orbit_partition(int ambient, const SubgroupSpec& acting) {
  require_enumerable(ambient, "orbit_partition");
  const auto gens = generators(acting, ambient);
  const std::size_t size = std::size_t{1} << node_count(ambient);

  UnionFind uf(size);
  for (std::size_t w = 0; w < size; ++w) {
    const auto g = TreeAutomorphism::from_word(ambient, w);
    for (const auto& s : gens) uf.unite(w, conjugate(g, s).word());
  }

  // Words are visited in increasing order, so each orbit's first element is its minimum.
  OrbitDecomposition d;
  d.acting = acting;
  d.ambient = ambient;
  d.orbit_of.assign(size, 0);
  std::vector<std::uint32_t> index_of_root(size, UINT32_MAX);
  for (std::size_t w = 0; w < size; ++w) {
    const std::size_t root = uf.find(w);
    auto& idx = index_of_root[root];
    const auto g = TreeAutomorphism::from_word(ambient, w);
    if (idx == UINT32_MAX) {
      idx = static_cast<std::uint32_t>(d.orbits.size());
      d.orbits.push_back({g, {}, acting});
    }
    d.orbits[idx].elements.push_back(g);
    d.orbit_of[w] = idx;
  }
  return d;
}

OrbitDecomposition conjugacy_classes(int n) {
  return orbit_partition(n, SubgroupSpec::full());
}

OrbitDecomposition orbit_decomposition(int n, int k) {
  require_nonnegative(n, "n");
  require_nonnegative(k, "k");
  return orbit_partition(n + k, SubgroupSpec::embedded(n));
}

OrbitCountPrediction predicted_orbit_count(int n, int k) {
  require_nonnegative(n, "n");
  if (k < 1) throw InvalidArgument("predicted_orbit_count needs k >= 1");
  BigInt chain = 1;
  for (int j = 0; j < k; ++j) chain *= group_order(n + j);
  const BigInt c = class_count(n);
  BigInt pow2 = 1;
  mpz_mul_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), static_cast<unsigned long>(k));
  const BigInt a_prev = pow2 / 2 - 1;  // a_{k-1} = 2^{k-1} - 1
  return {chain * (c + pow2 - 1), chain * (c + a_prev)};
}

StructuredLabeling structured_labeling(const OrbitDecomposition& d, int n, int k) {
  if (k < 1) throw InvalidArgument("structured labeling needs k >= 1");
  if (d.ambient != n + k || !(d.acting == SubgroupSpec::embedded(n)))
    throw InvalidArgument("decomposition is not A_" + std::to_string(n) + " acting on A_" +
                          std::to_string(n + k));
  const int ambient = n + k;
  const auto chain = enumerate(SubgroupSpec::hat_chain(n, ambient - 1), ambient);

  StructuredLabeling out;
  std::vector<std::uint32_t> hits(d.count(), 0);

  auto place = [&](OrbitLabel label, const std::vector<TreeAutomorphism>& seed_orbit,
                   const std::string& name) {
    std::vector<TreeAutomorphism> set;
    set.reserve(seed_orbit.size());
    for (const auto& x : seed_orbit) set.push_back(multiply(x, label.hat));
    std::sort(set.begin(), set.end());
    label.orbit = d.orbit_of[set.front().word()];
    if (d.orbits[label.orbit].elements != set && out.labels_are_orbits) {
      out.labels_are_orbits = false;
      if (!out.witness) out.witness = name + " * " + describe(label.hat) + " is not an orbit";
    }
    ++hits[label.orbit];
    out.labels.push_back(std::move(label));
  };

  for (const auto& cls : conjugacy_classes(n).orbits) {
    std::vector<TreeAutomorphism> lifted;
    for (const auto& g : cls.elements) lifted.push_back(perm_embed_to(g, ambient));
    for (const auto& h : chain) {
      OrbitLabel label;
      label.kind = OrbitLabel::Kind::Class;
      label.seed = lifted.front();
      label.hat = h;
      place(std::move(label), lifted, "C_n(" + describe(cls.representative) + ")");
    }
  }
  for (const auto& I : index_subsets(n + 1, ambient)) {
    if (I.empty()) continue;
    // The left-coset form prepends larger indices: beta_{i_s} ... beta_{i_1}.
    auto b = identity(ambient);
    for (auto it = I.rbegin(); it != I.rend(); ++it) b = multiply(b, beta(ambient, *it));
    const auto seed_orbit = orbit(b, SubgroupSpec::embedded(n)).elements;
    for (const auto& h : chain) {
      OrbitLabel label;
      label.kind = OrbitLabel::Kind::BetaOrbit;
      label.seed = b;
      label.indices = I;
      label.hat = h;
      place(std::move(label), seed_orbit, "O_n(beta_" + index_list(I) + ")");
    }
  }

  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (hits[i] == 1) continue;
    out.bijective = false;
    if (!out.witness)
      out.witness = "orbit of " + describe(d.orbits[i].representative) + " labelled " +
                    std::to_string(hits[i]) + " times";
  }
  if (!out.labels_are_orbits) out.bijective = false;
  return out;
}

std::size_t CosetSystem::total_size() const {
  return std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
}

namespace {

// Marks each coset in a membership table indexed by word; fills disjoint/covers/witness.
void audit_cosets(CosetSystem& cs,
                  const std::function<std::vector<TreeAutomorphism>(const TreeAutomorphism&)>& coset) {
  const std::size_t size = std::size_t{1} << node_count(cs.ambient);
  std::vector<std::uint8_t> seen(size, 0);
  for (const auto& r : cs.representatives) {
    const auto elements = coset(r);
    cs.sizes.push_back(elements.size());
    for (const auto& x : elements) {
      if (seen[x.word()] && cs.disjoint) {
        cs.disjoint = false;
        if (!cs.witness) cs.witness = x;
      }
      seen[x.word()] = 1;
    }
  }
  for (std::size_t w = 0; w < size; ++w) {
    if (seen[w]) continue;
    cs.covers = false;
    if (!cs.witness) cs.witness = TreeAutomorphism::from_word(cs.ambient, w);
    break;
  }
}

}  // namespace

CosetSystem right_coset_reps(int n, int l) {
  require_nonnegative(n, "n");
  require_nonnegative(l, "l");
  const int ambient = n + l + 1;
  require_enumerable(ambient, "right_coset_reps");

  CosetSystem cs;
  cs.ambient = ambient;
  cs.base = n;
  cs.kind = CosetKind::Right;
  for (const auto& r : coset_representatives(n, l)) cs.representatives.push_back(r.element);

  const auto sub = enumerate(SubgroupSpec::embedded(n), ambient);
  audit_cosets(cs, [&](const TreeAutomorphism& r) {
    std::vector<TreeAutomorphism> coset;
    coset.reserve(sub.size());
    for (const auto& a : sub) coset.push_back(multiply(a, r));
    std::sort(coset.begin(), coset.end());
    coset.erase(std::unique(coset.begin(), coset.end()), coset.end());
    return coset;
  });
  return cs;
}

std::vector<TreeAutomorphism> double_coset(int n, const TreeAutomorphism& g) {
  if (g.level() != n + 1) throw LevelMismatch(n + 1, g.level());
  require_enumerable(n + 1, "double_coset");
  const auto gens = generators(SubgroupSpec::embedded(n), n + 1);
  std::set<TreeAutomorphism> seen{g};
  std::deque<TreeAutomorphism> queue{g};
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      for (const auto& y : {multiply(s, x), multiply(x, s)})
        if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

CosetSystem double_cosets(int n) {
  require_nonnegative(n, "n");
  require_enumerable(n + 1, "double_cosets");
  CosetSystem cs;
  cs.ambient = n + 1;
  cs.base = n;
  cs.kind = CosetKind::Double;
  cs.representatives = enumerate(SubgroupSpec::hat(n), n + 1);
  cs.representatives.push_back(beta(n + 1, n + 1));
  std::sort(cs.representatives.begin(), cs.representatives.end());
  audit_cosets(cs, [&](const TreeAutomorphism& r) { return double_coset(n, r); });
  return cs;
}

std::vector<AlgebraElement> centralizer_algebra_basis(int n, int k) {
  const auto d = orbit_decomposition(n, k);
  std::vector<AlgebraElement> out;
  out.reserve(d.count());
  for (const auto& o : d.orbits) out.push_back(orbit_sum(o));
  return out;
}

std::optional<std::vector<Rational>> expand_in_orbit_basis(const AlgebraElement& x,
                                                           const OrbitDecomposition& d) {
  if (x.level() != d.ambient) throw LevelMismatch(d.ambient, x.level());
  std::vector<Rational> coords(d.count());
  std::vector<std::size_t> present(d.count(), 0);
  for (const auto& [g, c] : x.terms()) {
    const auto idx = d.orbit_of[g.word()];
    if (present[idx] == 0) coords[idx] = c;
    else if (coords[idx] != c) return std::nullopt;
    ++present[idx];
  }
  for (std::size_t i = 0; i < d.count(); ++i)
    if (present[i] != 0 && present[i] != d.orbits[i].elements.size()) return std::nullopt;
  return coords;
}

ClosureReport check_basis_closure(int n, int k) {
  const auto d = orbit_decomposition(n, k);
  std::vector<AlgebraElement> basis;
  for (const auto& o : d.orbits) basis.push_back(orbit_sum(o));
  ClosureReport r;
  r.dimension = basis.size();
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      ++r.products;
      if (expand_in_orbit_basis(basis[a] * basis[b], d)) continue;
      if (r.closed)
        r.witness = "product of orbit sums of " + describe(d.orbits[a].representative) +
                    " and " + describe(d.orbits[b].representative);
      r.closed = false;
    }
  return r;
}

bool PresentationReport::all_hold() const { return first_failure() == nullptr; }

bool PresentationReport::root_first_all_hold() const {
  return std::all_of(root_first.begin(), root_first.end(),
                     [](const RelationInstance& r) { return r.holds; });
}

const RelationInstance* PresentationReport::first_failure() const {
  for (const auto& r : instances)
    if (!r.holds) return &r;
  return nullptr;
}

namespace {

std::vector<RelationInstance> evaluate_relations(
    int n, const std::function<Permutation(int)>& gen,
    std::vector<RelationInstance>* untestable) {
  const auto id = Permutation::identity(std::uint32_t{1} << n);
  std::vector<RelationInstance> out;
  auto record = [&](int family, int i, int j, int k, const Permutation& base, unsigned e) {
    out.push_back({family, i, j, k, base.cycle_notation(), power(base, e) == id});
  };
  for (int i = 1; i <= n; ++i) record(1, i, 0, 0, gen(i), 2);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) record(2, i, j, 0, compose(gen(i), gen(j)), 4);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n - i; ++k) {
        if (j + k > n) {
          if (untestable) untestable->push_back({3, i, j, k, "", false});
          continue;
        }
        const auto w = compose(compose(compose(gen(i), gen(j)), gen(i)), gen(j + k));
        record(3, i, j, k, w, 2);
      }
  return out;
}

}  // namespace

PresentationReport check_presentation(int n) {
  if (n < 0 || n > kMaxLevel)
    throw LevelTooLarge("presentation level " + std::to_string(n) + " outside 0.." +
                        std::to_string(kMaxLevel));
  PresentationReport r;
  r.level = n;
  r.instances = evaluate_relations(
      n, [n](int i) { return to_permutation(beta(n, i)); }, &r.untestable);
  r.root_first = evaluate_relations(
      n, [n](int i) { return to_permutation(beta(n, n + 1 - i)); }, nullptr);
  return r;
}

}  // namespace wreath
