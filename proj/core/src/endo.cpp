#include "wreath/endo.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "wreath/error.hpp"
#include "wreath/structure.hpp"

namespace wreath {

TreeAutomorphism TensorBasisElement::right() const {
  return multiply(chain, beta_product(chain.level(), indices));
}

std::strong_ordering operator<=>(const TensorBasisElement& a, const TensorBasisElement& b) {
  if (auto c = a.left <=> b.left; c != 0) return c;
  return a.right() <=> b.right();
}

namespace {

void check_tensor_params(int n, int k, int l) {
  if (n < 0 || k < 0 || l < 0) throw InvalidArgument("n, k, l must be >= 0");
  if (l > n)
    throw EmptyHomSpace("hom space empty: cannot restrict " + std::to_string(l) +
                        " times from A_" + std::to_string(n));
  if (k < l) throw InvalidArgument("tensor basis needs k >= l");
  if (n + k - l > 4 || n > 4)
    throw LevelTooLarge("tensor basis needs n + k - l <= 4 and n <= 4");
  if (tensor_basis_size(n, k, l) > BigInt(static_cast<unsigned long>(kMaxTensorBasis)))
    throw LevelTooLarge("tensor basis for (" + std::to_string(n) + "," + std::to_string(k) +
                        "," + std::to_string(l) + ") exceeds " +
                        std::to_string(kMaxTensorBasis) + " elements");
}

std::size_t index_of(const std::vector<TensorBasisElement>& basis, const TensorBasisElement& t) {
  auto it = std::lower_bound(basis.begin(), basis.end(), t);
  if (it == basis.end() || !(*it == t))
    throw Error("tensor element is not a basis element (renormalization failure)");
  return static_cast<std::size_t>(it - basis.begin());
}

std::string describe(const TensorBasisElement& t) {
  return t.left.cycles() + " (x) " + t.right().cycles();
}

// Sparse row-echelon span over Q.
class SpanTracker {
 public:
  using Vec = std::map<std::size_t, Rational>;

  /// Adds v; returns true when it was independent of the rows so far.
  bool add(Vec v) {
    while (!v.empty()) {
      const auto pivot = v.begin()->first;
      auto row = rows_.find(pivot);
      if (row == rows_.end()) {
        const Rational lead = v.begin()->second;
        for (auto& [i, c] : v) c /= lead;
        rows_.emplace(pivot, std::move(v));
        return true;
      }
      const Rational factor = v.begin()->second;
      for (const auto& [i, c] : row->second) {
        auto& slot = v[i];
        slot -= factor * c;
        if (slot == 0) v.erase(i);
      }
    }
    return false;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::map<std::size_t, Vec> rows_;
};

SpanTracker::Vec coordinates(const AlgebraElement& x, const OrbitDecomposition& d) {
  auto coords = expand_in_orbit_basis(x, d);
  if (!coords) throw Error("element is not in the centralizer algebra");
  SpanTracker::Vec v;
  for (std::size_t i = 0; i < coords->size(); ++i)
    if ((*coords)[i] != 0) v.emplace(i, (*coords)[i]);
  return v;
}

std::string tuple_label(const std::vector<int>& tuple) {
  std::string out;
  for (auto it = tuple.rbegin(); it != tuple.rend(); ++it) {
    if (!out.empty()) out += " ";
    out += "beta_" + std::to_string(*it);
  }
  return out;
}

}  // namespace

BigInt tensor_basis_size(int n, int k, int l) {
  if (l > n) return 0;
  return group_order(n + k - l) * group_order(n) / group_order(n - l);
}

std::vector<TensorBasisElement> tensor_basis(int n, int k, int l) {
  check_tensor_params(n, k, l);
  const int top = n + k - l;
  std::vector<CosetRep> reps;
  if (l == 0) reps.push_back({identity(n), {}, identity(n)});
  else reps = coset_representatives(n - l, l - 1);

  std::vector<TensorBasisElement> out;
  for (const auto& a : enumerate_group(top))
    for (const auto& r : reps) out.push_back({a, r.chain, r.indices});
  return out;
}

TensorBasisElement conj_action_tensor(const TreeAutomorphism& h, const TensorBasisElement& t,
                                      int n, int k, int l) {
  const int top = n + k - l;
  if (h.level() != n) throw LevelMismatch(n, h.level());
  if (t.left.level() != top) throw LevelMismatch(top, t.left.level());
  if (t.chain.level() != n) throw LevelMismatch(n, t.chain.level());
  const auto a = conjugate(t.left, perm_relevel(h, top));
  if (l == 0) return {a, t.chain, t.indices};

  const auto f = factorize(conjugate(t.right(), h), n - l);
  auto chain = identity(n);
  for (const auto& hat : f.hats) chain = multiply(chain, hat);
  return {multiply(a, perm_relevel(f.base, top)), chain, f.indices};
}

ActionCheck tensor_action_is_group_action(int n, int k, int l, int acting_level) {
  if (acting_level < 0 || acting_level > n)
    throw InvalidArgument("acting level must lie in 0.." + std::to_string(n));
  const auto basis = tensor_basis(n, k, l);
  const auto group = enumerate(SubgroupSpec::embedded(acting_level), n);
  ActionCheck r;
  for (const auto& h2 : group)
    for (const auto& t : basis) {
      const auto inner = conj_action_tensor(h2, t, n, k, l);
      for (const auto& h1 : group) {
        ++r.checks;
        if (conj_action_tensor(multiply(h1, h2), t, n, k, l) ==
            conj_action_tensor(h1, inner, n, k, l))
          continue;
        r.is_action = false;
        r.witness = "h1=" + h1.cycles() + " h2=" + h2.cycles() + " t=" + describe(t);
        return r;
      }
    }
  return r;
}

EndBasis end_ind_res_basis(int n, int k, int l) {
  const auto basis = tensor_basis(n, k, l);
  EndBasis e;
  e.n = n;
  e.k = k;
  e.l = l;
  e.acting = SubgroupSpec::embedded(n - l);
  e.tensor_basis_size = basis.size();

  std::vector<std::size_t> parent(basis.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  const auto gens = generators(e.acting, n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (const auto& s : gens) {
      auto a = find(i);
      auto b = find(index_of(basis, conj_action_tensor(s, basis[i], n, k, l)));
      if (a > b) std::swap(a, b);
      parent[b] = a;
    }
  if (l > 0) {
    for (const auto& h : enumerate(e.acting, n))
      for (const auto& t : basis)
        if (conj_action_tensor(h, t, n, k, l).indices != t.indices) ++e.index_set_changes;
  }

  std::vector<std::size_t> slot(basis.size(), SIZE_MAX);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto& s = slot[find(i)];
    if (s == SIZE_MAX) {
      s = e.orbits.size();
      e.orbits.emplace_back();
    }
    e.orbits[s].push_back(basis[i]);
  }
  e.dimension = e.orbits.size();

  if (l == 0) {
    for (const auto& o : e.orbits) {
      AlgebraElement v(n + k);
      for (const auto& t : o) v.add_term(t.left, 1);
      e.algebra_vectors.push_back(std::move(v));
    }
  }
  return e;
}

std::vector<DGenerator> d_generators(int n, int m) {
  if (n < 1 || m <= n || m > 4) throw LevelTooLarge("d_generators needs 1 <= n < m <= 4");
  std::vector<DGenerator> out;
  for (int ell = 0; ell <= m - n - 1; ++ell) {
    const auto gens = generators(SubgroupSpec::hat(n + ell), m);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      DGenerator g;
      g.family = DGenerator::Family::HatSwap;
      g.ell = ell;
      g.index = static_cast<int>(i) + 1;
      g.seed = gens[i];
      g.element = AlgebraElement::basis(gens[i]);
      g.label = "beta_" + std::to_string(g.index) + "^(" + std::to_string(ell) + ")";
      out.push_back(std::move(g));
    }
  }
  for (const auto& J : index_subsets(n + 1, m)) {
    if (J.empty()) continue;
    auto seed = identity(m);
    for (auto it = J.rbegin(); it != J.rend(); ++it) seed = multiply(seed, beta(m, *it));
    DGenerator g;
    g.family = DGenerator::Family::OrbitSum;
    g.tuple = J;
    g.seed = seed;
    g.element = orbit_sum(seed, SubgroupSpec::embedded(n));
    g.label = "o_" + std::to_string(n) + "(" + tuple_label(J) + ")";
    out.push_back(std::move(g));
  }
  return out;
}

SpanningReport spanning_check(int n, int m) {
  if (n < 1 || m <= n || m > 3) throw LevelTooLarge("spanning_check needs 1 <= n < m <= 3");
  SpanningReport r;
  r.n = n;
  r.m = m;
  const auto d = orbit_decomposition(n, m - n);
  r.centralizer_dimension = d.count();

  const auto gens = d_generators(n, m);
  for (const auto& g : gens)
    if (!centralizes(g.element, SubgroupSpec::embedded(n))) r.generators_centralize = false;

  // Words in the generators: close {1} under right multiplication by each generator.
  SpanTracker d_span;
  std::vector<AlgebraElement> d_basis;
  std::vector<AlgebraElement> frontier{AlgebraElement::one(m)};
  d_span.add(coordinates(frontier.front(), d));
  d_basis.push_back(frontier.front());
  while (!frontier.empty()) {
    std::vector<AlgebraElement> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        auto y = x * g.element;
        if (d_span.add(coordinates(y, d))) {
          d_basis.push_back(y);
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  r.d_dimension = d_basis.size();

  SpanTracker products;
  const auto classes = conjugacy_classes(n);
  r.class_sums = classes.count();
  for (const auto& cls : classes.orbits) {
    AlgebraElement c(m);
    for (const auto& g : cls.elements) c.add_term(perm_embed_to(g, m), 1);
    for (const auto& x : d_basis) products.add(coordinates(c * x, d));
  }
  r.product_rank = products.rank();
  r.spans = r.product_rank == r.centralizer_dimension;
  r.dimensions_multiply = r.class_sums * r.d_dimension == r.centralizer_dimension;
  return r;
}

std::vector<PowerRow> power_table(int n, int max_k) {
  if (n < 0 || n > 3) throw LevelTooLarge("power_table needs 0 <= n <= 3");
  if (max_k < 1 || max_k > 16) throw LevelTooLarge("power_table needs 1 <= max_k <= 16");
  const auto o = orbit_sum(beta(n + 1, n + 1), SubgroupSpec::embedded(n));
  std::vector<PowerRow> rows;
  auto value = o;
  for (int k = 1; k <= max_k; ++k) {
    if (k > 1) value = value * o;
    PowerRow row;
    row.k = k;
    row.value = value;
    row.asserted = n == 1 && k % 2 == 1;
    if (row.asserted) {
      BigInt scale = 1;
      mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), static_cast<unsigned long>(k - 1));
      row.holds = value == Rational(scale) * o;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

OppositeReport opposite_check(int n, int k) {
  if (n < 0 || k < 0 || n + k > 3) throw LevelTooLarge("opposite_check needs n + k <= 3");
  const auto d = orbit_decomposition(n, k);
  std::vector<AlgebraElement> basis;
  for (const auto& o : d.orbits) basis.push_back(orbit_sum(o));

  OppositeReport r;
  r.n = n;
  r.k = k;
  r.ind_dimension = basis.size();
  r.res_dimension = basis.size();

  const auto e = AlgebraElement::one(n + k);
  // Ind: R_a(x) = x v_a. Res: L_a(x) = v_a x. Compose on e and expand.
  const std::size_t dim = basis.size();
  std::vector<std::vector<std::vector<Rational>>> ind(dim), res(dim);
  for (std::size_t a = 0; a < dim; ++a) {
    ind[a].resize(dim);
    res[a].resize(dim);
    for (std::size_t b = 0; b < dim; ++b) {
      auto ra_rb = (e * basis[b]) * basis[a];
      auto la_lb = basis[a] * (basis[b] * e);
      auto ci = expand_in_orbit_basis(ra_rb, d);
      auto cr = expand_in_orbit_basis(la_lb, d);
      if (!ci || !cr) throw Error("orbit-sum basis is not closed under multiplication");
      ind[a][b] = std::move(*ci);
      res[a][b] = std::move(*cr);
    }
  }
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      r.triples += dim;
      if (res[a][b] != ind[b][a] && r.transposed) {
        r.transposed = false;
        r.witness = "basis pair " + d.orbits[a].representative.cycles() + ", " +
                    d.orbits[b].representative.cycles();
      }
      if (res[a][b] != res[b][a]) r.commutative = false;
    }
  return r;
}

}  // namespace wreath
