#include "permtree/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "permtree/bigint.hpp"

namespace permtree {

BigInt factorial(std::uint64_t n) {
  BigInt result = 1;
  for (std::uint64_t k = 2; k <= n; ++k) result *= k;
  return result;
}

Permutation::Permutation(std::size_t degree) : images_(degree) {
  for (std::size_t i = 0; i < degree; ++i) images_[i] = static_cast<Point>(i);
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      throw std::invalid_argument("image table is not a bijection");
    seen[p] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      Point p = cycle[k];
      if (p >= degree) throw std::invalid_argument("cycle point out of range");
      if (used[p]) throw std::invalid_argument("cycles are not disjoint");
      used[p] = true;
      images[p] = cycle[(k + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  std::vector<Permutation> word;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (i == text.size()) throw std::invalid_argument("empty permutation text");
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++i;
    std::vector<Point> cycle;
    while (true) {
      skip_space();
      if (i >= text.size()) throw std::invalid_argument("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("unexpected character in cycle notation");
      std::uint64_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (value >= degree) throw std::invalid_argument("cycle point exceeds degree");
        ++i;
      }
      cycle.push_back(static_cast<Point>(value));
    }
    std::vector<Point> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("repeated point inside a cycle");
    word.push_back(from_cycles(degree, {cycle}));
    skip_space();
  }
  return word_product(word, degree);
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  Permutation result;
  result.images_ = std::move(inv);
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

bool Permutation::is_even() const {
  std::size_t transpositions = 0;
  for (const auto& c : cycles()) transpositions += c.size() - 1;
  return transpositions % 2 == 0;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    Point p = static_cast<Point>(start);
    while (!seen[p]) {
      seen[p] = true;
      cycle.push_back(p);
      p = images_[p];
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

std::vector<Point> Permutation::support() const {
  std::vector<Point> result;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) result.push_back(static_cast<Point>(i));
  return result;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& c : cs) {
    out << '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out << ' ';
      out << c[k];
    }
    out << ')';
  }
  return out.str();
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in compose");
  std::vector<Point> images(a.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = a(b(static_cast<Point>(i)));
  return Permutation::from_images_unchecked(std::move(images));
}

Permutation word_product(std::span<const Permutation> word, std::size_t degree) {
  Permutation result(degree);
  for (const auto& x : word) result = compose(x, result);
  return result;
}

Permutation conjugate(const Permutation& g, const Permutation& x) {
  return compose(x, compose(g, x.inverse()));
}

Permutation three_cycle(std::size_t degree, Point a, Point b, Point c) {
  return Permutation::from_cycles(degree, {{a, b, c}});
}

std::vector<std::pair<Point, Point>> transposition_word(const Permutation& sigma) {
  // (c0 c1 ... ck) = (c0 c1)(c0 c2)...(c0 ck) with the left factor applied first.
  std::vector<std::pair<Point, Point>> word;
  for (const auto& c : sigma.cycles())
    for (std::size_t k = 1; k < c.size(); ++k) word.emplace_back(c[0], c[k]);
  return word;
}

std::vector<Permutation> three_cycle_decompose(const Permutation& sigma) {
  if (!sigma.is_even()) throw std::invalid_argument("three_cycle_decompose: odd permutation");
  const std::size_t n = sigma.degree();
  auto word = transposition_word(sigma);
  std::vector<Permutation> result;
  for (std::size_t i = 0; i + 1 < word.size(); i += 2) {
    auto [a, b] = word[i];
    auto [c, d] = word[i + 1];
    if ((a == c && b == d) || (a == d && b == c)) continue;
    // Rename so that a shared point, if any, sits in the (a b)(b d) position.
    if (a == c) std::swap(a, b);
    else if (a == d) { std::swap(a, b); std::swap(c, d); }
    else if (b == d) std::swap(c, d);
    if (b == c) {
      result.push_back(three_cycle(n, a, d, b));
    } else {
      result.push_back(three_cycle(n, a, c, b));
      result.push_back(three_cycle(n, b, d, c));
    }
  }
  return result;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace permtree
