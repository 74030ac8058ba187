#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permtree {

using Point = std::uint32_t;

/// A bijection of {0, ..., n-1}, stored as its image table.
///
/// Products follow one global convention: `compose(a, b)` (also `a * b`)
/// applies `b` first and then `a`. Words, i.e. sequences of permutations
/// written left to right as in hand calculations, are evaluated with the
/// leftmost factor applied first; see `word_product`.
class Permutation {
 public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Throws std::invalid_argument unless `images` is a bijection of [0, n).
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Skips the bijection check; for callers that construct images from
  /// other permutations.
  static Permutation from_images_unchecked(std::vector<Point> images) {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  /// Builds a permutation from disjoint cycles; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  /// Parses cycle notation such as "(0 1 2)(3 4)"; "()" is the identity.
  /// Cycles need not be disjoint: they are multiplied as a word.
  static Permutation parse(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point p) const { return images_[p]; }
  std::span<const Point> images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  bool is_even() const;

  /// Nontrivial cycles, each starting at its smallest point, sorted by that point.
  std::vector<std::vector<Point>> cycles() const;

  /// Points moved by the permutation, increasing.
  std::vector<Point> support() const;

  /// Cycle notation, "()" for the identity.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

/// Applies `b` first, then `a`.
Permutation compose(const Permutation& a, const Permutation& b);

inline Permutation operator*(const Permutation& a, const Permutation& b) {
  return compose(a, b);
}

/// Evaluates a word x1 x2 ... xk with x1 applied first.
Permutation word_product(std::span<const Permutation> word, std::size_t degree);

/// x * g * x^-1.
Permutation conjugate(const Permutation& g, const Permutation& x);

/// The 3-cycle (a b c): a -> b -> c -> a.
Permutation three_cycle(std::size_t degree, Point a, Point b, Point c);

/// Writes an even permutation as a word of 3-cycles (see `word_product`) by
/// pairing consecutive transpositions: (a b)(b d) = (a d b) and
/// (a b)(c d) = (a c b)(b d c). Throws std::invalid_argument on odd input.
std::vector<Permutation> three_cycle_decompose(const Permutation& sigma);

/// Transpositions whose word product is `sigma`.
std::vector<std::pair<Point, Point>> transposition_word(const Permutation& sigma);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace permtree
