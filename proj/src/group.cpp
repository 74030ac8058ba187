#include "permtree/group.hpp"

#include <algorithm>
#include <stdexcept>

#include "permtree/errors.hpp"

namespace permtree {

namespace {

void recompute_orbit(ChainLevel& level, std::size_t degree) {
  level.orbit.assign(1, level.base);
  level.orbit_pos.assign(degree, -1);
  level.orbit_pos[level.base] = 0;
  level.transversal.assign(1, Permutation(degree));
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    for (const auto& s : level.generators) {
      Point q = s(level.orbit[k]);
      if (level.orbit_pos[q] >= 0) continue;
      level.orbit_pos[q] = static_cast<int>(level.orbit.size());
      level.orbit.push_back(q);
      level.transversal.push_back(compose(s, level.transversal[k]));
    }
  }
  level.transversal_inv.clear();
  level.transversal_inv.reserve(level.transversal.size());
  for (const auto& u : level.transversal) level.transversal_inv.push_back(u.inverse());
}

bool fixes_all(const Permutation& g, const std::vector<ChainLevel>& levels, std::size_t upto) {
  for (std::size_t l = 0; l < upto; ++l)
    if (g(levels[l].base) != levels[l].base) return false;
  return true;
}

std::pair<Permutation, std::size_t> strip(Permutation h, const std::vector<ChainLevel>& levels,
                                          std::size_t from) {
  for (std::size_t l = from; l < levels.size(); ++l) {
    Point p = h(levels[l].base);
    int pos = levels[l].orbit_pos[p];
    if (pos < 0) return {std::move(h), l};
    h = compose(levels[l].transversal_inv[pos], h);
  }
  return {std::move(h), levels.size()};
}

Point first_moved(const Permutation& g) {
  for (std::size_t i = 0; i < g.degree(); ++i)
    if (g(static_cast<Point>(i)) != i) return static_cast<Point>(i);
  throw std::logic_error("identity has no moved point");
}

}  // namespace

std::vector<ChainLevel> schreier_sims(std::size_t degree, const std::vector<Permutation>& gens,
                                      const std::vector<Point>& base_prefix) {
  std::vector<ChainLevel> levels;
  for (Point b : base_prefix) {
    if (b >= degree) throw std::invalid_argument("base point exceeds degree");
    ChainLevel level;
    level.base = b;
    levels.push_back(std::move(level));
  }
  std::vector<Permutation> strong;
  for (const auto& g : gens) {
    if (g.is_identity()) continue;
    if (std::find(strong.begin(), strong.end(), g) != strong.end()) continue;
    strong.push_back(g);
    if (fixes_all(g, levels, levels.size())) {
      ChainLevel level;
      level.base = first_moved(g);
      levels.push_back(std::move(level));
    }
  }
  for (std::size_t l = 0; l < levels.size(); ++l) {
    for (const auto& s : strong)
      if (fixes_all(s, levels, l)) levels[l].generators.push_back(s);
    recompute_orbit(levels[l], degree);
  }

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels.size()) - 1;
  while (i >= 0) {
    auto li = static_cast<std::size_t>(i);
    bool restarted = false;
    for (std::size_t k = 0; k < levels[li].orbit.size() && !restarted; ++k) {
      for (std::size_t gi = 0; gi < levels[li].generators.size(); ++gi) {
        const ChainLevel& level = levels[li];
        const Permutation& s = level.generators[gi];
        Point q = s(level.orbit[k]);
        Permutation schreier =
            compose(level.transversal_inv[level.orbit_pos[q]], compose(s, level.transversal[k]));
        if (schreier.is_identity()) continue;
        auto [h, drop] = strip(std::move(schreier), levels, li + 1);
        if (drop == levels.size() && h.is_identity()) continue;
        if (drop == levels.size()) {
          ChainLevel level_new;
          level_new.base = first_moved(h);
          level_new.orbit_pos.assign(degree, -1);
          levels.push_back(std::move(level_new));
        }
        for (std::size_t l = li + 1; l <= drop; ++l) {
          levels[l].generators.push_back(h);
          recompute_orbit(levels[l], degree);
        }
        i = static_cast<std::ptrdiff_t>(drop);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
  return levels;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::vector<Point> base_prefix)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
  if (generators_.empty()) generators_.push_back(Permutation(degree_));
  auto levels = schreier_sims(degree_, generators_, base_prefix);
  order_ = 1;
  for (const auto& l : levels) order_ *= l.orbit.size();
  chain_ = std::make_shared<const std::vector<ChainLevel>>(std::move(levels));
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup(degree, {}); }

const std::vector<ChainLevel>& PermGroup::levels() const noexcept {
  static const std::vector<ChainLevel> empty;
  return chain_ ? *chain_ : empty;
}

std::pair<Permutation, std::size_t> PermGroup::sift(const Permutation& g) const {
  if (g.degree() != degree_) throw std::invalid_argument("degree mismatch in sift");
  return strip(g, levels(), 0);
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [h, drop] = sift(g);
  return drop == levels().size() && h.is_identity();
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> b;
  for (const auto& l : levels()) b.push_back(l.base);
  return b;
}

std::vector<Permutation> PermGroup::strong_generators() const {
  std::vector<Permutation> result;
  for (const auto& l : levels())
    for (const auto& s : l.generators)
      if (std::find(result.begin(), result.end(), s) == result.end()) result.push_back(s);
  return result;
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  Permutation g(degree_);
  for (const auto& l : levels()) {
    std::uniform_int_distribution<std::size_t> pick(0, l.orbit.size() - 1);
    g = compose(g, l.transversal[pick(rng)]);
  }
  return g;
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (other.degree_ != degree_) return false;
  for (const auto& g : generators_)
    if (!other.contains(g)) return false;
  return true;
}

bool PermGroup::same_group(const PermGroup& other) const {
  return order_ == other.order_ && is_subgroup_of(other);
}

std::uint64_t PermGroup::small_order() const {
  if (order_ > BigInt(std::numeric_limits<std::uint64_t>::max()))
    throw ResourceLimitError("group order does not fit in 64 bits");
  return static_cast<std::uint64_t>(order_);
}

std::uint64_t PermGroup::rank(const Permutation& g) const {
  std::vector<Point> images;
  for (const auto& l : levels()) images.push_back(g(l.base));
  return rank_base_images(images);
}

std::uint64_t PermGroup::rank_base_images(std::span<Point> images) const {
  const auto& lv = levels();
  std::uint64_t r = 0;
  for (std::size_t l = 0; l < lv.size(); ++l) {
    int pos = lv[l].orbit_pos[images[l]];
    if (pos < 0) throw std::invalid_argument("rank: element not in group");
    r = r * lv[l].orbit.size() + static_cast<std::uint64_t>(pos);
    const Permutation& inv = lv[l].transversal_inv[pos];
    for (std::size_t j = l + 1; j < lv.size(); ++j) images[j] = inv(images[j]);
  }
  return r;
}

void PermGroup::unrank_base_images(std::uint64_t r, std::span<Point> images) const {
  const auto& lv = levels();
  std::size_t k = lv.size();
  // Digits are stored least significant last.
  std::vector<std::size_t> idx(k);
  for (std::size_t l = k; l-- > 0;) {
    idx[l] = r % lv[l].orbit.size();
    r /= lv[l].orbit.size();
  }
  for (std::size_t j = 0; j < k; ++j) {
    Point x = lv[j].base;
    for (std::size_t l = j + 1; l-- > 0;) x = lv[l].transversal[idx[l]](x);
    images[j] = x;
  }
}

Permutation PermGroup::unrank(std::uint64_t r) const {
  const auto& lv = levels();
  std::size_t k = lv.size();
  std::vector<std::size_t> idx(k);
  for (std::size_t l = k; l-- > 0;) {
    idx[l] = r % lv[l].orbit.size();
    r /= lv[l].orbit.size();
  }
  Permutation g(degree_);
  for (std::size_t l = 0; l < k; ++l) g = compose(g, lv[l].transversal[idx[l]]);
  return g;
}

std::vector<Permutation> PermGroup::elements(std::uint64_t limit) const {
  if (order_ > limit) throw ResourceLimitError("group too large to enumerate");
  std::uint64_t total = static_cast<std::uint64_t>(order_);
  std::vector<Permutation> result;
  result.reserve(total);
  for (std::uint64_t r = 0; r < total; ++r) result.push_back(unrank(r));
  return result;
}

}  // namespace permtree
