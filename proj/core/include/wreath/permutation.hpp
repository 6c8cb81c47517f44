#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wreath {

/// Bijection of {1, ..., degree} in one-line form. images()[i] is the image of label i + 1.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::uint32_t degree);
  /// Throws InvalidArgument unless `images` is a bijection of 1..size.
  static Permutation from_images(std::vector<std::uint32_t> images);
  /// Parses "(1 3)(2 4)", "(1,3)(2,4)" or "e". Unlisted labels are fixed.
  static Permutation from_cycles(std::uint32_t degree, std::string_view cycles);

  std::uint32_t degree() const { return static_cast<std::uint32_t>(images_.size()); }
  const std::vector<std::uint32_t>& images() const { return images_; }

  /// Image of a 1-based label.
  std::uint32_t operator()(std::uint32_t label) const { return images_[label - 1]; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Cycles sorted by smallest moved point, each starting at its minimum; identity is "e".
  std::string cycle_notation() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {}

  std::vector<std::uint32_t> images_;
};

/// p after q: x maps to p(q(x)).
Permutation compose(const Permutation& p, const Permutation& q);

Permutation power(const Permutation& p, unsigned exponent);

/// Sorted multiset of cycle lengths including fixed points.
std::vector<std::uint32_t> cycle_type(const Permutation& p);

}  // namespace wreath
