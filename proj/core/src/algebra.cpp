#include "wreath/algebra.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

#include "wreath/error.hpp"

namespace wreath {

AlgebraElement AlgebraElement::one(int level) { return basis(identity(level)); }

AlgebraElement AlgebraElement::basis(const TreeAutomorphism& g, const Rational& coefficient) {
  AlgebraElement x(g.level());
  x.add_term(g, coefficient);
  return x;
}

AlgebraElement AlgebraElement::sum_of(int level, const std::vector<TreeAutomorphism>& elements) {
  AlgebraElement x(level);
  for (const auto& g : elements) {
    if (g.level() != level) throw LevelMismatch(level, g.level());
    x.add_term(g, 1);
  }
  return x;
}

Rational AlgebraElement::coefficient(const TreeAutomorphism& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const TreeAutomorphism& g, const Rational& coefficient) {
  if (g.level() != level_) throw LevelMismatch(level_, g.level());
  // GMP comparisons assume canonical form; Rational(p, q) is not reduced on construction.
  Rational c = coefficient;
  c.canonicalize();
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  if (other.level_ != level_) throw LevelMismatch(level_, other.level_);
  for (const auto& [g, c] : other.terms_) add_term(g, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  if (other.level_ != level_) throw LevelMismatch(level_, other.level_);
  for (const auto& [g, c] : other.terms_) add_term(g, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rational& scalar) {
  Rational c = scalar;
  c.canonicalize();
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, v] : terms_) v *= c;
  return *this;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    if (!first) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    first = false;
    Rational mag = abs(c);
    if (mag != 1) out += mag.get_str() + "*";
    out += g.cycles();
  }
  return out;
}

AlgebraElement alg_add(const AlgebraElement& x, const AlgebraElement& y) {
  auto r = x;
  r += y;
  return r;
}

AlgebraElement alg_scale(const AlgebraElement& x, const Rational& c) {
  auto r = x;
  r *= c;
  return r;
}

AlgebraElement alg_multiply(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.level() != y.level()) throw LevelMismatch(x.level(), y.level());
  const int level = x.level();
  std::unordered_map<std::uint64_t, Rational> acc;
  acc.reserve(x.size() * y.size());
  for (const auto& [g, a] : x.terms())
    for (const auto& [h, b] : y.terms()) acc[multiply(g, h).word()] += a * b;

  std::vector<std::pair<std::uint64_t, Rational>> sorted(acc.begin(), acc.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  AlgebraElement out(level);
  for (const auto& [w, c] : sorted)
    if (c != 0) out.add_term(TreeAutomorphism::from_word(level, w), c);
  return out;
}

AlgebraElement alg_power(const AlgebraElement& x, unsigned exponent) {
  auto result = AlgebraElement::one(x.level());
  for (unsigned i = 0; i < exponent; ++i) result = alg_multiply(result, x);
  return result;
}

AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y) {
  return alg_multiply(x, y) - alg_multiply(y, x);
}

Orbit orbit(const TreeAutomorphism& g, const SubgroupSpec& acting) {
  const auto gens = generators(acting, g.level());
  std::set<TreeAutomorphism> seen{g};
  std::deque<TreeAutomorphism> queue{g};
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      auto y = conjugate(x, s);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  Orbit o{*seen.begin(), {seen.begin(), seen.end()}, acting};
  return o;
}

Orbit orbit_exhaustive(const TreeAutomorphism& g, const SubgroupSpec& acting) {
  std::set<TreeAutomorphism> seen;
  for (const auto& h : enumerate(acting, g.level())) seen.insert(conjugate(g, h));
  return {*seen.begin(), {seen.begin(), seen.end()}, acting};
}

AlgebraElement orbit_sum(const Orbit& o) {
  return AlgebraElement::sum_of(o.representative.level(), o.elements);
}

AlgebraElement orbit_sum(const TreeAutomorphism& g, const SubgroupSpec& acting) {
  return orbit_sum(orbit(g, acting));
}

namespace {

bool commutes_with_all(const AlgebraElement& x, const std::vector<TreeAutomorphism>& group) {
  for (const auto& s : group) {
    auto e = AlgebraElement::basis(s);
    if (alg_multiply(x, e) != alg_multiply(e, x)) return false;
  }
  return true;
}

}  // namespace

bool centralizes(const AlgebraElement& x, const SubgroupSpec& sub) {
  return commutes_with_all(x, generators(sub, x.level()));
}

bool centralizes_exhaustive(const AlgebraElement& x, const SubgroupSpec& sub) {
  return commutes_with_all(x, enumerate(sub, x.level()));
}

}  // namespace wreath
