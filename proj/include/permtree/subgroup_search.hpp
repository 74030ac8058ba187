#pragma once

#include <functional>

#include "permtree/group.hpp"

namespace permtree {

/// Backtrack search for the subgroup {g in G : accept(g)} where the accepted
/// elements must form a subgroup. `base_prefix` fixes the first base points;
/// `image_ok(level, image)` prunes partial base images at levels below
/// `search_depth`, and every element of the pointwise stabilizer of the first
/// `search_depth` base points is assumed to satisfy `accept`.
struct SubgroupSearch {
  std::vector<Point> base_prefix;
  std::size_t search_depth = 0;
  std::function<bool(std::size_t level, Point image)> image_ok;
  std::function<bool(const Permutation&)> accept;
};

PermGroup search_subgroup(const PermGroup& g, const SubgroupSearch& spec);

}  // namespace permtree
