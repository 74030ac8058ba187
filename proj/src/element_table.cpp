#include "permtree/element_table.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "permtree/errors.hpp"

namespace permtree {

ElementTable::ElementTable(const PermGroup& g, std::uint64_t limit) : group_(g) {
  if (g.order() > limit) throw ResourceLimitError("group too large for an element table");
  elements_ = g.elements(limit);
  const std::size_t n = elements_.size();
  table_.resize(n * n);
  inverse_.resize(n);
  order_.resize(n);
  identity_ = index_of(Permutation(g.degree()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      table_[i * n + j] = static_cast<std::uint32_t>(g.rank(compose(elements_[i], elements_[j])));
    inverse_[i] = static_cast<std::uint32_t>(g.rank(elements_[i].inverse()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t k = 1, x = static_cast<std::uint32_t>(i);
    while (x != identity_) {
      x = mul(x, static_cast<std::uint32_t>(i));
      ++k;
    }
    order_[i] = k;
  }
}

std::uint32_t ElementTable::index_of(const Permutation& g) const {
  return static_cast<std::uint32_t>(group_.rank(g));
}

Subgroup generated_subgroup(const ElementTable& t, std::vector<std::uint32_t> gens) {
  Subgroup h{ElementSet(t.size()), {}};
  std::vector<std::uint32_t> list{t.identity()};
  h.members.set(t.identity());
  for (std::uint32_t g : gens) {
    if (h.members.test(g)) continue;
    h.generators.push_back(g);
    // Rescan everything: old elements also need the new generator applied.
    for (std::size_t k = 0; k < list.size(); ++k)
      for (std::uint32_t s : h.generators) {
        std::uint32_t y = t.mul(s, list[k]);
        if (!h.members.test(y)) {
          h.members.set(y);
          list.push_back(y);
        }
      }
  }
  return h;
}

namespace {

struct Invariant {
  std::size_t order;
  std::vector<std::size_t> order_histogram;
  auto operator<=>(const Invariant&) const = default;
};

Invariant invariant_of(const ElementTable& t, const ElementSet& s) {
  Invariant inv{s.count(), {}};
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) {
    std::uint32_t o = t.element_order(static_cast<std::uint32_t>(i));
    if (inv.order_histogram.size() <= o) inv.order_histogram.resize(o + 1);
    ++inv.order_histogram[o];
  }
  return inv;
}

ElementSet conjugate_set(const ElementTable& t, const ElementSet& s, std::uint32_t x) {
  ElementSet out(t.size());
  std::uint32_t xi = t.inv(x);
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i))
    out.set(t.mul(t.mul(x, static_cast<std::uint32_t>(i)), xi));
  return out;
}

std::vector<ElementSet> conjugates(const ElementTable& t, const ElementSet& s) {
  std::set<ElementSet> seen;
  for (std::uint32_t x = 0; x < t.size(); ++x) seen.insert(conjugate_set(t, s, x));
  return {seen.begin(), seen.end()};
}

bool conjugate_to(const ElementTable& t, const ElementSet& a, const ElementSet& b) {
  for (std::uint32_t x = 0; x < t.size(); ++x)
    if (conjugate_set(t, a, x) == b) return true;
  return false;
}

}  // namespace

std::vector<SubgroupClass> subgroup_classes(const ElementTable& t) {
  // Cyclic subgroups of prime-power order.
  std::set<ElementSet> zuppo_sets;
  std::vector<std::uint32_t> zuppos;
  for (std::uint32_t g = 0; g < t.size(); ++g) {
    std::uint32_t o = t.element_order(g);
    if (o == 1) continue;
    std::uint32_t p = 2;
    while (o % p) ++p;
    std::uint32_t q = o;
    while (q % p == 0) q /= p;
    if (q != 1) continue;
    auto c = generated_subgroup(t, {g});
    if (zuppo_sets.insert(c.members).second) zuppos.push_back(g);
  }

  std::map<Invariant, std::vector<std::size_t>> by_invariant;
  std::vector<Subgroup> reps;
  auto add = [&](Subgroup h) -> bool {
    auto inv = invariant_of(t, h.members);
    auto& bucket = by_invariant[inv];
    for (std::size_t r : bucket)
      if (conjugate_to(t, h.members, reps[r].members)) return false;
    bucket.push_back(reps.size());
    reps.push_back(std::move(h));
    return true;
  };
  add(generated_subgroup(t, {}));
  for (std::size_t k = 0; k < reps.size(); ++k) {
    for (std::uint32_t z : zuppos) {
      if (reps[k].members.test(z)) continue;
      auto gens = reps[k].generators;
      gens.push_back(z);
      add(generated_subgroup(t, std::move(gens)));
    }
  }

  std::vector<SubgroupClass> classes;
  for (auto& h : reps) {
    std::size_t size = conjugates(t, h.members).size();
    classes.push_back({std::move(h), size});
  }
  std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.representative.order() != b.representative.order())
      return a.representative.order() < b.representative.order();
    return a.representative.members < b.representative.members;
  });
  return classes;
}

std::vector<Subgroup> all_subgroups(const ElementTable& t) {
  std::vector<Subgroup> result;
  for (const auto& c : subgroup_classes(t)) {
    const auto& rep = c.representative;
    std::set<ElementSet> seen;
    for (std::uint32_t x = 0; x < t.size(); ++x) {
      auto conj = conjugate_set(t, rep.members, x);
      if (!seen.insert(conj).second) continue;
      std::vector<std::uint32_t> gens;
      std::uint32_t xi = t.inv(x);
      for (std::uint32_t g : rep.generators) gens.push_back(t.mul(t.mul(x, g), xi));
      result.push_back({std::move(conj), std::move(gens)});
    }
  }
  std::sort(result.begin(), result.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members < b.members;
  });
  return result;
}

PermGroup to_group(const ElementTable& t, const Subgroup& h) {
  std::vector<Permutation> gens;
  for (std::uint32_t g : h.generators) gens.push_back(t.element(g));
  return PermGroup(t.group().degree(), std::move(gens));
}

}  // namespace permtree
