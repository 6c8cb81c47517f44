#include "wreath/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "wreath/error.hpp"

namespace wreath {

Permutation Permutation::identity(std::uint32_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 1u);
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<std::uint32_t> images) {
  std::vector<bool> seen(images.size(), false);
  for (auto x : images) {
    if (x == 0 || x > images.size() || seen[x - 1])
      throw InvalidArgument("images do not form a bijection");
    seen[x - 1] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::uint32_t degree, std::string_view text) {
  auto result = identity(degree);
  std::vector<std::uint32_t> cycle;
  bool open = false;
  std::size_t i = 0;

  // A written product c1 c2 ... is c1 after c2 after ..., matching compose().
  auto close_cycle = [&] {
    auto images = identity(degree).images_;
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      if (images[cycle[j] - 1] != cycle[j])
        throw InvalidArgument("label repeated inside a cycle: " + std::to_string(cycle[j]));
      images[cycle[j] - 1] = cycle[(j + 1) % cycle.size()];
    }
    result = compose(result, Permutation(std::move(images)));
    cycle.clear();
  };

  while (i < text.size()) {
    char c = text[i];
    if (c == '(') {
      if (open) throw InvalidArgument("nested cycle in '" + std::string(text) + "'");
      open = true;
      ++i;
    } else if (c == ')') {
      if (!open) throw InvalidArgument("unbalanced ')' in '" + std::string(text) + "'");
      open = false;
      close_cycle();
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!open) throw InvalidArgument("label outside a cycle in '" + std::string(text) + "'");
      std::uint32_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + static_cast<std::uint32_t>(text[i++] - '0');
      if (v == 0 || v > degree) throw InvalidArgument("label out of range: " + std::to_string(v));
      cycle.push_back(v);
    } else if (c == 'e' && !open) {
      ++i;
    } else if (c == ' ' || c == ',') {
      ++i;
    } else {
      throw InvalidArgument("unexpected character in cycle notation: '" + std::string(text) + "'");
    }
  }
  if (open) throw InvalidArgument("unterminated cycle in '" + std::string(text) + "'");
  return result;
}

bool Permutation::is_identity() const {
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::uint32_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

std::string Permutation::cycle_notation() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (std::uint32_t start = 1; start <= degree(); ++start) {
    if (done[start - 1] || images_[start - 1] == start) continue;
    out += '(';
    std::uint32_t x = start;
    bool first = true;
    while (!done[x - 1]) {
      done[x - 1] = true;
      if (!first) out += ' ';
      out += std::to_string(x);
      first = false;
      x = images_[x - 1];
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw InvalidArgument("degree mismatch in compose");
  std::vector<std::uint32_t> images(p.degree());
  for (std::uint32_t x = 1; x <= p.degree(); ++x) images[x - 1] = p(q(x));
  return Permutation::from_images(std::move(images));
}

Permutation power(const Permutation& p, unsigned exponent) {
  auto result = Permutation::identity(p.degree());
  for (unsigned i = 0; i < exponent; ++i) result = compose(p, result);
  return result;
}

std::vector<std::uint32_t> cycle_type(const Permutation& p) {
  std::vector<std::uint32_t> lengths;
  std::vector<bool> done(p.degree(), false);
  for (std::uint32_t start = 1; start <= p.degree(); ++start) {
    if (done[start - 1]) continue;
    std::uint32_t len = 0;
    for (std::uint32_t x = start; !done[x - 1]; x = p(x)) {
      done[x - 1] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

}  // namespace wreath
