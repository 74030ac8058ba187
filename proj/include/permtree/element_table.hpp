#pragma once

#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "permtree/group.hpp"

namespace permtree {

/// Explicit multiplication table of a small group; elements are indexed by
/// their chain rank.
class ElementTable {
 public:
  explicit ElementTable(const PermGroup& g, std::uint64_t limit = 5040);

  std::size_t size() const noexcept { return elements_.size(); }
  const PermGroup& group() const noexcept { return group_; }
  const Permutation& element(std::uint32_t i) const { return elements_[i]; }
  std::uint32_t index_of(const Permutation& g) const;
  std::uint32_t identity() const noexcept { return identity_; }
  /// Index of compose(element(i), element(j)).
  std::uint32_t mul(std::uint32_t i, std::uint32_t j) const { return table_[std::size_t(i) * size() + j]; }
  std::uint32_t inv(std::uint32_t i) const { return inverse_[i]; }
  std::uint32_t element_order(std::uint32_t i) const { return order_[i]; }

 private:
  PermGroup group_;
  std::vector<Permutation> elements_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> order_;
  std::uint32_t identity_ = 0;
};

using ElementSet = boost::dynamic_bitset<>;

struct Subgroup {
  ElementSet members;
  std::vector<std::uint32_t> generators;
  std::size_t order() const { return members.count(); }
};

Subgroup generated_subgroup(const ElementTable& t, std::vector<std::uint32_t> gens);

/// Subgroups up to conjugacy, built by joining cyclic subgroups of prime-power
/// order onto known class representatives. Sorted by order, then members.
struct SubgroupClass {
  Subgroup representative;
  std::size_t class_size = 0;
};
std::vector<SubgroupClass> subgroup_classes(const ElementTable& t);

/// Every subgroup (all conjugates of every class), sorted by order then members.
std::vector<Subgroup> all_subgroups(const ElementTable& t);

PermGroup to_group(const ElementTable& t, const Subgroup& h);

}  // namespace permtree
