#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "wreath/subgroup.hpp"
#include "wreath/tree_automorphism.hpp"

namespace wreath {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Exact rational linear combination of elements of A_n, i.e. an element of Q[A_n].
/// Zero coefficients are never stored; terms iterate in swap-word order.
class AlgebraElement {
 public:
  using Terms = std::map<TreeAutomorphism, Rational>;

  explicit AlgebraElement(int level = 0) : level_(level) {}

  static AlgebraElement zero(int level) { return AlgebraElement(level); }
  static AlgebraElement one(int level);
  static AlgebraElement basis(const TreeAutomorphism& g, const Rational& coefficient = 1);
  /// Sum with coefficient one over `elements` (all of the same level).
  static AlgebraElement sum_of(int level, const std::vector<TreeAutomorphism>& elements);

  int level() const { return level_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const TreeAutomorphism& g) const;
  /// Adds c * g, dropping the term if it cancels.
  void add_term(const TreeAutomorphism& g, const Rational& c);

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(const Rational& c);

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.level_ == b.level_ && a.terms_ == b.terms_;
  }

  /// "2*e + 2*(1 2)(3 4)"; zero is "0".
  std::string to_string() const;

 private:
  int level_;
  Terms terms_;
};

AlgebraElement alg_add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement alg_scale(const AlgebraElement& x, const Rational& c);
/// Convolution: the bilinear extension of multiply().
AlgebraElement alg_multiply(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement alg_power(const AlgebraElement& x, unsigned exponent);
/// xy - yx.
AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y);

inline AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
  return alg_add(x, y);
}
inline AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) {
  auto r = x;
  r -= y;
  return r;
}
inline AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
  return alg_multiply(x, y);
}
inline AlgebraElement operator*(const Rational& c, const AlgebraElement& x) {
  return alg_scale(x, c);
}

/// Conjugation orbit {h g h^{-1} : h in acting}.
struct Orbit {
  TreeAutomorphism representative;  // canonical minimum
  std::vector<TreeAutomorphism> elements;  // swap-word order
  SubgroupSpec acting = SubgroupSpec::trivial();
};

/// Orbit by closure under the acting subgroup's generators.
Orbit orbit(const TreeAutomorphism& g, const SubgroupSpec& acting);
/// Orbit by conjugating with every element of the acting subgroup.
Orbit orbit_exhaustive(const TreeAutomorphism& g, const SubgroupSpec& acting);

AlgebraElement orbit_sum(const TreeAutomorphism& g, const SubgroupSpec& acting);
AlgebraElement orbit_sum(const Orbit& o);

/// True iff x commutes with every generator of `sub` (inside A_{x.level()}).
bool centralizes(const AlgebraElement& x, const SubgroupSpec& sub);
/// True iff x commutes with every element of `sub`.
bool centralizes_exhaustive(const AlgebraElement& x, const SubgroupSpec& sub);

}  // namespace wreath
