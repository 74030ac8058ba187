#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <vector>

#include "permtree/bigint.hpp"
#include "permtree/permutation.hpp"

namespace permtree {

/// One level of a stabilizer chain: the basic orbit of `base` under the
/// strong generators that fix every earlier base point, with an explicit
/// transversal (`transversal[k]` maps `base` to `orbit[k]`).
struct ChainLevel {
  Point base = 0;
  std::vector<Permutation> generators;
  std::vector<Point> orbit;
  std::vector<int> orbit_pos;
  std::vector<Permutation> transversal;
  std::vector<Permutation> transversal_inv;

  bool in_orbit(Point p) const { return orbit_pos[p] >= 0; }
};

/// A finitely generated subgroup of Sym(n) with a certified base and strong
/// generating set. The chain is built by deterministic Schreier-Sims, so
/// order and membership are exact. Copies share the immutable chain.
class PermGroup {
 public:
  PermGroup() = default;

  /// `base_prefix` fixes the first base points (redundant points are kept as
  /// levels with trivial orbits). Generators must all have the given degree.
  PermGroup(std::size_t degree, std::vector<Permutation> generators,
            std::vector<Point> base_prefix = {});

  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const BigInt& order() const noexcept { return order_; }
  bool is_trivial() const noexcept { return order_ == 1; }

  bool contains(const Permutation& g) const;

  /// Sifts `g` through the chain; returns the residue and the level at which
  /// sifting stopped (== chain length when it passed every level).
  std::pair<Permutation, std::size_t> sift(const Permutation& g) const;

  std::vector<Point> base() const;
  std::vector<Permutation> strong_generators() const;
  const std::vector<ChainLevel>& levels() const noexcept;

  /// Uniform random element.
  Permutation random_element(std::mt19937_64& rng) const;

  bool is_subgroup_of(const PermGroup& other) const;
  bool same_group(const PermGroup& other) const;

  /// Mixed-radix index in [0, |G|); requires |G| < 2^64 and g in G.
  std::uint64_t rank(const Permutation& g) const;
  Permutation unrank(std::uint64_t r) const;

  /// Rank from base images g(b_0), ..., g(b_{k-1}); `images` is clobbered.
  std::uint64_t rank_base_images(std::span<Point> images) const;
  /// Writes the base images of unrank(r) into `images` (length = chain length).
  void unrank_base_images(std::uint64_t r, std::span<Point> images) const;

  /// All elements in rank order; throws ResourceLimitError above `limit`.
  std::vector<Permutation> elements(std::uint64_t limit = 1u << 22) const;

  /// |G| as a 64-bit value; throws ResourceLimitError if it does not fit.
  std::uint64_t small_order() const;

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::shared_ptr<const std::vector<ChainLevel>> chain_;
  BigInt order_ = 1;
};

/// Schreier generators are sifted against levels built so far; exposed for tests.
std::vector<ChainLevel> schreier_sims(std::size_t degree, const std::vector<Permutation>& gens,
                                      const std::vector<Point>& base_prefix);

}  // namespace permtree
