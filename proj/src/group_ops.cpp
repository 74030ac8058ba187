#include "permtree/group_ops.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <unordered_set>

#include "permtree/errors.hpp"
#include "permtree/subgroup_search.hpp"

namespace permtree {

const char* to_string(Giant g) {
  switch (g) {
    case Giant::SYM: return "SYM";
    case Giant::ALT: return "ALT";
    case Giant::NEITHER: return "NEITHER";
  }
  return "?";
}

std::vector<DomainSubset> orbits(const std::vector<Permutation>& gens, const DomainSubset& domain) {
  const std::size_t n = domain.parent_degree();
  auto in_domain = domain.mask();
  std::vector<bool> seen(n, false);
  std::vector<DomainSubset> result;
  for (Point start : domain) {
    if (seen[start]) continue;
    std::vector<Point> orbit{start};
    seen[start] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const auto& s : gens) {
        if (s.degree() != n) throw std::invalid_argument("generator degree mismatch");
        Point q = s(orbit[k]);
        if (!in_domain[q]) throw std::invalid_argument("generator moves a point outside the domain");
        if (!seen[q]) {
          seen[q] = true;
          orbit.push_back(q);
        }
      }
    }
    result.emplace_back(n, std::move(orbit));
  }
  return result;
}

bool is_transitive(const PermGroup& g, const DomainSubset& domain) {
  return domain.size() > 0 && orbits(g.generators(), domain).size() == 1;
}

namespace {

struct UnionFind {
  std::vector<Point> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  Point find(Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

std::vector<Point> pair_block_closure(const std::vector<Permutation>& gens,
                                      const DomainSubset& domain, Point a, Point b) {
  UnionFind uf(domain.parent_degree());
  std::vector<std::pair<Point, Point>> pending;
  if (uf.unite(a, b)) pending.emplace_back(a, b);
  while (!pending.empty()) {
    auto [x, y] = pending.back();
    pending.pop_back();
    for (const auto& s : gens) {
      Point sx = s(x), sy = s(y);
      if (uf.unite(sx, sy)) pending.emplace_back(sx, sy);
    }
  }
  std::vector<Point> cls(domain.parent_degree());
  for (std::size_t p = 0; p < cls.size(); ++p) cls[p] = uf.find(static_cast<Point>(p));
  return cls;
}

namespace {

BlockSystem blocks_from_classes(const DomainSubset& domain, const std::vector<Point>& cls) {
  BlockSystem system{domain, {}};
  std::vector<int> index(domain.parent_degree(), -1);
  for (Point p : domain) {
    Point c = cls[p];
    if (index[c] < 0) {
      index[c] = static_cast<int>(system.blocks.size());
      system.blocks.emplace_back();
    }
    system.blocks[index[c]].push_back(p);
  }
  return system;
}

BlockSystem singleton_system(const DomainSubset& domain) {
  BlockSystem system{domain, {}};
  for (Point p : domain) system.blocks.push_back({p});
  return system;
}

}  // namespace

BlockSystem minimal_block_system(const PermGroup& g, const DomainSubset& domain) {
  if (!is_transitive(g, domain)) throw std::invalid_argument("group is not transitive on the domain");
  if (domain.size() <= 2) return singleton_system(domain);
  const Point omega = domain[0];
  std::optional<BlockSystem> best;
  for (std::size_t k = 1; k < domain.size(); ++k) {
    auto cls = pair_block_closure(g.generators(), domain, omega, domain[k]);
    BlockSystem candidate = blocks_from_classes(domain, cls);
    if (candidate.count() <= 1) continue;
    if (!best || candidate.block_size() < best->block_size() ||
        (candidate.block_size() == best->block_size() && candidate.blocks[0] < best->blocks[0]))
      best = std::move(candidate);
  }
  return best ? *best : singleton_system(domain);
}

bool is_block_system(const std::vector<Permutation>& gens, const BlockSystem& blocks) {
  auto block_of = blocks.block_of();
  for (const auto& s : gens) {
    for (const auto& block : blocks.blocks) {
      int target = block_of[s(block.front())];
      if (target < 0) return false;
      for (Point p : block)
        if (block_of[s(p)] != target) return false;
    }
  }
  return true;
}

Permutation truncate(const Permutation& p, std::size_t n) {
  std::vector<Point> images(p.images().begin(), p.images().begin() + static_cast<std::ptrdiff_t>(n));
  return Permutation(std::move(images));
}

namespace {

std::vector<Permutation> truncate_all(const std::vector<Permutation>& gens, std::size_t n) {
  std::vector<Permutation> result;
  for (const auto& s : gens) {
    auto t = truncate(s, n);
    if (!t.is_identity() && std::find(result.begin(), result.end(), t) == result.end())
      result.push_back(std::move(t));
  }
  return result;
}

/// Stabilizer of the extra points [n, n + k) in an extended action.
PermGroup stabilize_extra(std::size_t n, const std::vector<Permutation>& extended, std::size_t k,
                          std::vector<Point> prefix) {
  std::size_t total = extended.empty() ? n + k : extended.front().degree();
  PermGroup big(total, extended, prefix);
  const auto& lv = big.levels();
  std::vector<Permutation> gens;
  if (lv.size() > k) gens = truncate_all(lv[k].generators, n);
  return PermGroup(n, std::move(gens));
}

}  // namespace

PermGroup pointwise_stabilizer(const PermGroup& g, const DomainSubset& a) {
  PermGroup chained(g.degree(), g.generators(), a.points());
  const auto& lv = chained.levels();
  std::vector<Permutation> gens;
  if (lv.size() > a.size()) gens = lv[a.size()].generators;
  return PermGroup(g.degree(), std::move(gens));
}

PermGroup setwise_stabilizer(const PermGroup& g, const DomainSubset& a) {
  auto in_a = a.mask();
  SubgroupSearch spec;
  spec.base_prefix = a.points();
  spec.search_depth = a.size();
  spec.image_ok = [&](std::size_t, Point image) { return static_cast<bool>(in_a[image]); };
  spec.accept = [&](const Permutation& x) {
    for (Point p : a)
      if (!in_a[x(p)]) return false;
    return true;
  };
  PermGroup found = search_subgroup(g, spec);
  return PermGroup(g.degree(), found.generators());
}

Permutation restrict_to(const Permutation& p, const DomainSubset& a) {
  std::vector<Point> images(p.degree());
  std::iota(images.begin(), images.end(), 0);
  for (Point x : a) images[x] = p(x);
  return Permutation(std::move(images));
}

PermGroup restriction(const PermGroup& g, const DomainSubset& a) {
  if (!a.invariant_under(g.generators()))
    throw std::invalid_argument("restriction: subset is not invariant under the group");
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) gens.push_back(restrict_to(s, a));
  return PermGroup(g.degree(), std::move(gens));
}

Permutation block_image(const Permutation& p, const BlockSystem& blocks) {
  auto block_of = blocks.block_of();
  std::vector<Point> images(blocks.count());
  for (std::size_t b = 0; b < blocks.count(); ++b) {
    int target = block_of[p(blocks.blocks[b].front())];
    if (target < 0) throw std::invalid_argument("permutation does not preserve the block system");
    images[b] = static_cast<Point>(target);
  }
  return Permutation(std::move(images));
}

PermGroup block_action(const PermGroup& g, const BlockSystem& blocks) {
  if (!is_block_system(g.generators(), blocks))
    throw std::invalid_argument("block system is not invariant");
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) gens.push_back(block_image(s, blocks));
  return PermGroup(blocks.count(), std::move(gens));
}

PermGroup kernel_of_block_action(const PermGroup& g, const BlockSystem& blocks) {
  if (!is_block_system(g.generators(), blocks))
    throw std::invalid_argument("block system is not invariant");
  const std::size_t n = g.degree(), m = blocks.count();
  std::vector<Permutation> extended;
  for (const auto& s : g.generators()) {
    auto bi = block_image(s, blocks);
    std::vector<Point> images(s.images().begin(), s.images().end());
    for (std::size_t b = 0; b < m; ++b) images.push_back(static_cast<Point>(n + bi(b)));
    extended.push_back(Permutation::from_images_unchecked(std::move(images)));
  }
  std::vector<Point> prefix(m);
  std::iota(prefix.begin(), prefix.end(), static_cast<Point>(n));
  return stabilize_extra(n, extended, m, std::move(prefix));
}

PermGroup alt_preimage(const PermGroup& g, const BlockSystem& blocks) {
  if (!is_block_system(g.generators(), blocks))
    throw std::invalid_argument("block system is not invariant");
  const std::size_t n = g.degree();
  std::vector<Permutation> extended;
  for (const auto& s : g.generators()) {
    bool odd = !block_image(s, blocks).is_even();
    std::vector<Point> images(s.images().begin(), s.images().end());
    images.push_back(static_cast<Point>(odd ? n + 1 : n));
    images.push_back(static_cast<Point>(odd ? n : n + 1));
    extended.push_back(Permutation::from_images_unchecked(std::move(images)));
  }
  return stabilize_extra(n, extended, 1, {static_cast<Point>(n)});
}

Giant is_giant(const PermGroup& g, const DomainSubset& domain) {
  BigInt full = factorial(domain.size());
  if (g.order() == full) return Giant::SYM;
  if (domain.size() >= 2 && g.order() * 2 == full) return Giant::ALT;
  return Giant::NEITHER;
}

std::vector<Permutation> closure_elements(std::size_t degree, const std::vector<Permutation>& gens,
                                          std::size_t limit) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> elements{Permutation(degree)};
  seen.insert(elements.front());
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (const auto& s : gens) {
      Permutation next = compose(s, elements[k]);
      if (seen.insert(next).second) {
        if (elements.size() >= limit) throw ResourceLimitError("closure exceeds element limit");
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

}  // namespace permtree

namespace permtree {

PermGroup intersection(const PermGroup& a, const PermGroup& b, std::uint64_t limit) {
  if (a.order() > b.order()) return intersection(b, a, limit);
  std::vector<Permutation> gens;
  PermGroup current = PermGroup::trivial(a.degree());
  for (const auto& x : a.elements(limit)) {
    if (!b.contains(x) || current.contains(x)) continue;
    gens.push_back(x);
    current = PermGroup(a.degree(), gens);
  }
  return current;
}

}  // namespace permtree
