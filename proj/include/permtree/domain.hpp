#pragma once

#include <cstddef>
#include <vector>

#include "permtree/permutation.hpp"

namespace permtree {

/// A subset of [0, n) kept as a strictly increasing point list.
class DomainSubset {
 public:
  DomainSubset() = default;

  /// Sorts and deduplicates `points`; throws if any point is >= parent_degree.
  DomainSubset(std::size_t parent_degree, std::vector<Point> points);

  static DomainSubset full(std::size_t degree);

  std::size_t parent_degree() const noexcept { return parent_degree_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const std::vector<Point>& points() const noexcept { return points_; }
  Point operator[](std::size_t i) const { return points_[i]; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  bool contains(Point p) const;

  /// Membership table of length parent_degree.
  std::vector<bool> mask() const;

  /// True iff every permutation maps the subset onto itself.
  bool invariant_under(const std::vector<Permutation>& gens) const;

  friend bool operator==(const DomainSubset&, const DomainSubset&) = default;

 private:
  std::size_t parent_degree_ = 0;
  std::vector<Point> points_;
};

/// A partition of a domain into equal-size blocks, sorted by smallest point.
struct BlockSystem {
  DomainSubset domain;
  std::vector<std::vector<Point>> blocks;

  std::size_t count() const noexcept { return blocks.size(); }
  std::size_t block_size() const noexcept { return blocks.empty() ? 0 : blocks.front().size(); }
  bool trivial() const noexcept { return block_size() <= 1 || count() <= 1; }

  /// Block index per point of the parent set; points outside the domain map to -1.
  std::vector<int> block_of() const;
};

}  // namespace permtree
