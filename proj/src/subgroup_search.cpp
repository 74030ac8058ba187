#include "permtree/subgroup_search.hpp"

#include <optional>
#include <stdexcept>

namespace permtree {

namespace {

struct Searcher {
  const std::vector<ChainLevel>& levels;
  const SubgroupSearch& spec;

  std::optional<Permutation> descend(std::size_t j, const Permutation& prefix) const {
    if (j == spec.search_depth) {
      if (spec.accept(prefix)) return prefix;
      return std::nullopt;
    }
    const ChainLevel& level = levels[j];
    for (const auto& t : level.transversal) {
      Permutation q = compose(prefix, t);
      if (!spec.image_ok(j, q(level.base))) continue;
      if (auto found = descend(j + 1, q)) return found;
    }
    return std::nullopt;
  }
};

std::vector<Point> orbit_of(Point start, const std::vector<Permutation>& gens, std::size_t n) {
  std::vector<bool> seen(n, false);
  std::vector<Point> orbit{start};
  seen[start] = true;
  for (std::size_t k = 0; k < orbit.size(); ++k)
    for (const auto& s : gens) {
      Point q = s(orbit[k]);
      if (!seen[q]) {
        seen[q] = true;
        orbit.push_back(q);
      }
    }
  return orbit;
}

}  // namespace

PermGroup search_subgroup(const PermGroup& g, const SubgroupSearch& spec) {
  if (spec.search_depth > spec.base_prefix.size())
    throw std::invalid_argument("search depth exceeds base prefix");
  const std::size_t n = g.degree();
  PermGroup chained(n, g.generators(), spec.base_prefix);
  const auto& levels = chained.levels();
  const std::size_t depth = spec.search_depth;

  std::vector<Permutation> found_gens;
  if (levels.size() > depth) found_gens = levels[depth].generators;
  PermGroup found(n, found_gens, spec.base_prefix);

  Searcher searcher{levels, spec};
  for (std::size_t l = depth; l-- > 0;) {
    const ChainLevel& level = levels[l];
    std::vector<bool> tried(n, false);
    for (std::size_t k = 1; k < level.orbit.size(); ++k) {
      Point gamma = level.orbit[k];
      if (tried[gamma] || !spec.image_ok(l, gamma)) continue;
      const ChainLevel& known = found.levels()[l];
      if (known.in_orbit(gamma)) continue;
      auto hit = searcher.descend(l + 1, level.transversal[k]);
      if (hit) {
        found_gens.push_back(*hit);
        found = PermGroup(n, found_gens, spec.base_prefix);
      } else {
        for (Point p : orbit_of(gamma, known.generators, n)) tried[p] = true;
      }
    }
  }
  return found;
}

}  // namespace permtree
