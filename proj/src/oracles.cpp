#include "permtree/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "permtree/bfs.hpp"
#include "permtree/corpus.hpp"
#include "permtree/element_table.hpp"
#include "permtree/errors.hpp"
#include "permtree/group_ops.hpp"

namespace permtree {

const char* to_string(DiameterMode m) {
  switch (m) {
    case DiameterMode::EXACT_SET: return "EXACT_SET";
    case DiameterMode::EXACT_GROUP: return "EXACT_GROUP";
    case DiameterMode::SAMPLED_LOWER: return "SAMPLED_LOWER";
  }
  return "?";
}

const char* to_string(ForcingStatus s) {
  return s == ForcingStatus::FORCED ? "FORCED" : "PRECONDITION_FAIL";
}

std::uint32_t cayley_diameter(const PermGroup& g, const std::vector<Permutation>& s, std::uint64_t max_order) {
  if (g.order() > max_order) throw ResourceLimitError("group too large for a Cayley BFS");
  if (!generates(g, s)) throw std::invalid_argument("S does not generate G");
  return bfs::cayley_diameter_parallel(g, s);
}

namespace {

/// Depth-first search over inverse classes, stopping at the first subset that
/// generates: adding generators never lengthens a Cayley diameter, so the
/// maximum is reached on an inclusion-minimal generating set.
struct MinimalSetSearch {
  const ElementTable& t;
  std::vector<std::uint32_t> classes;
  std::uint32_t best = 0;
  std::vector<std::uint32_t> best_set;
  std::uint64_t examined = 0;

  ElementSet closure(const std::vector<std::uint32_t>& gens) const {
    ElementSet seen(t.size());
    std::vector<std::uint32_t> list{t.identity()};
    seen.set(t.identity());
    for (std::size_t head = 0; head < list.size(); ++head)
      for (auto x : gens)
        for (auto y : {t.mul(x, list[head]), t.mul(t.inv(x), list[head])})
          if (!seen.test(y)) {
            seen.set(y);
            list.push_back(y);
          }
    return seen;
  }

  std::uint32_t eccentricity(const std::vector<std::uint32_t>& gens) const {
    std::vector<std::uint32_t> dist(t.size(), kUnreachable);
    std::vector<std::uint32_t> queue{t.identity()};
    dist[t.identity()] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto v = queue[head];
      for (auto x : gens)
        for (auto y : {t.mul(x, v), t.mul(t.inv(x), v)})
          if (dist[y] == kUnreachable) {
            dist[y] = dist[v] + 1;
            queue.push_back(y);
          }
    }
    return dist[queue.back()];
  }

  void run(std::vector<std::uint32_t>& chosen, std::size_t from) {
    ElementSet reach = closure(chosen);
    if (reach.count() == t.size()) {
      ++examined;
      auto d = eccentricity(chosen);
      if (d > best) {
        best = d;
        best_set = chosen;
      }
      return;
    }
    for (std::size_t k = from; k < classes.size(); ++k) {
      if (reach.test(classes[k])) continue;
      chosen.push_back(classes[k]);
      run(chosen, k + 1);
      chosen.pop_back();
    }
  }
};

}  // namespace

DiameterRecord group_diameter_exact(const PermGroup& g, const std::string& name, std::uint64_t threshold) {
  DiameterRecord rec;
  rec.group = name;
  rec.degree = g.degree();
  rec.mode = DiameterMode::EXACT_GROUP;
  if (g.order() > threshold) throw ResourceLimitError("group exceeds the exhaustive threshold");
  rec.generators = {Permutation(g.degree())};
  if (g.order() == 1) {
    rec.diameter = 1;
    rec.sets_examined = 1;
    return rec;
  }
  ElementTable t(g, threshold);
  MinimalSetSearch search{t, {}};
  for (std::uint32_t i = 0; i < t.size(); ++i)
    if (i != t.identity() && t.inv(i) >= i) search.classes.push_back(i);
  std::vector<std::uint32_t> chosen;
  search.run(chosen, 0);
  rec.diameter = search.best;
  rec.sets_examined = search.examined;
  for (auto i : search.best_set) {
    rec.generators.push_back(t.element(i));
    if (t.inv(i) != i) rec.generators.push_back(t.element(t.inv(i)));
  }
  return rec;
}

std::vector<Permutation> random_generating_set(const PermGroup& g, std::mt19937_64& rng, std::size_t start) {
  std::vector<Permutation> s;
  for (std::size_t k = 0; k < start; ++k) s.push_back(g.random_element(rng));
  while (!generates(g, s)) s.push_back(g.random_element(rng));
  return s;
}

DiameterRecord sampled_diameter(const PermGroup& g, std::mt19937_64& rng, std::size_t samples,
                                const std::string& name) {
  DiameterRecord rec;
  rec.group = name;
  rec.degree = g.degree();
  rec.mode = DiameterMode::SAMPLED_LOWER;
  for (std::size_t k = 0; k < samples; ++k) {
    auto s = random_generating_set(g, rng);
    auto d = cayley_diameter(g, s);
    if (k == 0 || d > rec.diameter) {
      rec.diameter = d;
      rec.generators = s;
    }
    ++rec.sets_examined;
  }
  if (g.order() == 1) rec.diameter = std::max<std::uint32_t>(rec.diameter, 1);
  return rec;
}

std::vector<DiameterRecord> alt_diam_records(std::size_t limit, std::uint64_t seed, std::size_t samples,
                                             std::uint64_t threshold) {
  std::vector<DiameterRecord> out;
  std::mt19937_64 rng(seed);
  for (std::size_t m = 3; m <= limit; ++m) {
    PermGroup alt(m, make::alternating(m));
    std::string name = "Alt(" + std::to_string(m) + ")";
    if (alt.order() <= threshold)
      out.push_back(group_diameter_exact(alt, name, threshold));
    else
      out.push_back(sampled_diameter(alt, rng, samples, name));
  }
  return out;
}

AltDiamTable alt_diam_table(std::size_t limit, std::uint64_t seed, std::size_t samples, std::uint64_t threshold) {
  AltDiamTable table;
  for (const auto& r : alt_diam_records(limit, seed, samples, threshold))
    table[r.degree] = {r.diameter, r.mode == DiameterMode::EXACT_GROUP};
  return table;
}

std::uint64_t min_proper_subgroup_index(std::size_t n) {
  if (n < 5 || n > 7) throw std::invalid_argument("min_proper_subgroup_index supports 5 <= n <= 7");
  ElementTable t(PermGroup(n, make::alternating(n)));
  std::size_t best = 1;
  for (const auto& c : subgroup_classes(t))
    if (c.representative.order() < t.size()) best = std::max(best, c.representative.order());
  return t.size() / best;
}

ForcingResult giant_forcing_check(const PermGroup& g, const DomainSubset& a, const PermGroup& h) {
  ForcingResult res;
  const std::size_t n = g.degree();
  auto full = DomainSubset::full(n);
  if (n < 5) res.failed.push_back("n < 5");
  if (!is_transitive(g, full)) res.failed.push_back("G is not transitive");
  if (3 * a.size() < 2 * n) res.failed.push_back("|A| < 2n/3");
  if (a.size() >= n) res.failed.push_back("A is the whole domain");
  if (h.degree() != n || !h.is_subgroup_of(g)) {
    res.failed.push_back("H is not a subgroup of G");
  } else if (!a.invariant_under(h.generators())) {
    res.failed.push_back("H does not stabilize A");
  } else if (a.size() >= 2 && restriction(h, a).order() * 2 < factorial(a.size())) {
    res.failed.push_back("H|_A does not contain Alt(A)");
  }
  if (!res.failed.empty()) return res;
  if (is_giant(g, full) == Giant::NEITHER)
    throw std::logic_error("hypotheses hold but G is not a giant");
  res.status = ForcingStatus::FORCED;
  return res;
}

namespace {

/// Word in the generators of g taking x into A, by breadth-first search.
std::vector<std::uint32_t> witness_word(const PermGroup& g, Point x, const std::vector<bool>& in_a) {
  const auto& gens = g.generators();
  std::vector<int> parent(g.degree(), -1), via(g.degree(), -1);
  std::vector<Point> queue{x};
  parent[x] = static_cast<int>(x);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Point p = queue[head];
    if (in_a[p]) {
      std::vector<std::uint32_t> word;
      for (Point q = p; q != x; q = static_cast<Point>(parent[q])) word.push_back(static_cast<std::uint32_t>(via[q]));
      std::reverse(word.begin(), word.end());
      return word;
    }
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Point q = gens[k](p);
      if (parent[q] < 0) {
        parent[q] = static_cast<int>(p);
        via[q] = static_cast<int>(k);
        queue.push_back(q);
      }
    }
  }
  throw std::invalid_argument("G is not transitive");
}

}  // namespace

Propagation propagate_three_cycles(const PermGroup& g, const DomainSubset& a) {
  const std::size_t n = g.degree();
  if (n < 5) throw std::invalid_argument("propagation needs n >= 5");
  if (3 * a.size() < 2 * n || a.size() >= n) throw std::invalid_argument("need 2n/3 <= |A| < n");
  if (!is_transitive(g, DomainSubset::full(n))) throw std::invalid_argument("G is not transitive");
  const Point p = a[0], q = a[1];
  for (std::size_t k = 2; k < a.size(); ++k)
    if (!g.contains(three_cycle(n, p, q, a[k]))) throw std::invalid_argument("G does not contain Alt(A)");

  auto in_a = a.mask();
  std::vector<bool> mask(in_a.begin(), in_a.end());
  std::vector<Point> outside;
  for (std::size_t x = 0; x < n; ++x)
    if (!mask[x]) outside.push_back(static_cast<Point>(x));

  Propagation out;
  for (std::size_t k = 2; k < a.size(); ++k) out.three_cycles.push_back(three_cycle(n, p, q, a[k]));
  for (Point x : outside) {
    auto word = witness_word(g, x, mask);
    std::vector<Permutation> letters;
    for (auto i : word) letters.push_back(g.generators()[i]);
    Permutation w = word_product(letters, n);
    Point y = w(x);
    std::vector<bool> image_out(n, false);
    for (Point z : outside) image_out[w(z)] = true;
    std::vector<Point> free;
    for (Point z : a)
      if (!image_out[z]) free.push_back(z);
    if (free.size() < 2) throw std::logic_error("no room in A for the conjugated 3-cycle");
    // w^-1 (r s y) w = (w^-1 r, w^-1 s, x)
    Permutation c = conjugate(three_cycle(n, free[0], free[1], y), w.inverse());
    Point u = w.inverse()(free[0]), v = w.inverse()(free[1]);
    if (c != three_cycle(n, u, v, x)) throw std::logic_error("conjugation did not give (u v x)");

    // An even permutation of A taking u -> p, v -> q, as 3-cycles of A.
    std::vector<Point> images(n);
    std::iota(images.begin(), images.end(), 0);
    std::vector<Point> rest_src, rest_dst;
    for (Point z : a) {
      if (z != u && z != v) rest_src.push_back(z);
      if (z != p && z != q) rest_dst.push_back(z);
    }
    images[u] = p;
    images[v] = q;
    for (std::size_t k = 0; k < rest_src.size(); ++k) images[rest_src[k]] = rest_dst[k];
    Permutation sigma(images);
    if (!sigma.is_even()) std::swap(images[rest_src[0]], images[rest_src[1]]), sigma = Permutation(images);
    for (const auto& tau : three_cycle_decompose(sigma)) c = conjugate(c, tau);
    if (c != three_cycle(n, p, q, x)) throw std::logic_error("rewriting did not reach (p q x)");
    out.three_cycles.push_back(c);
    out.witnesses.emplace_back(x, std::move(word));
  }
  return out;
}

namespace {

Permutation shift(const Permutation& p, std::size_t offset, std::size_t total) {
  std::vector<Point> images(total);
  std::iota(images.begin(), images.end(), 0);
  for (std::size_t i = 0; i < p.degree(); ++i) images[offset + i] = static_cast<Point>(offset + p(static_cast<Point>(i)));
  return Permutation(std::move(images));
}

PermGroup product_of(const std::vector<const PermGroup*>& gs) {
  std::size_t total = 0;
  for (auto* g : gs) total += g->degree();
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (auto* g : gs) {
    for (const auto& s : g->generators())
      if (!s.is_identity()) gens.push_back(shift(s, offset, total));
    offset += g->degree();
  }
  return PermGroup(total, std::move(gens));
}

ConjectureInstance assemble(std::string name, std::vector<ConjectureFactor> factors, std::optional<PermGroup> h) {
  if (factors.empty()) throw std::invalid_argument("conjecture instance needs a factor");
  ConjectureInstance inst;
  inst.name = std::move(name);
  std::vector<const PermGroup*> big, small;
  for (const auto& f : factors) {
    if (!f.g_sub.is_subgroup_of(f.g)) throw std::invalid_argument("G'_i is not a subgroup of G_i");
    inst.max_index = std::max(inst.max_index, static_cast<std::uint64_t>(f.g.order() / f.g_sub.order()));
    big.push_back(&f.g);
    small.push_back(&f.g_sub);
  }
  PermGroup prod = product_of(big);
  inst.h = h ? *h : prod;
  if (!inst.h.is_subgroup_of(prod)) throw std::invalid_argument("H is not inside the product of the G_i");
  inst.h_sub = intersection(inst.h, product_of(small));
  if (!inst.h_sub.is_subgroup_of(inst.h)) throw std::logic_error("H' is not inside H");
  inst.factors = std::move(factors);
  return inst;
}

void finish(ConjectureInstance& inst) {
  inst.ratio = static_cast<double>(inst.diam_h.diameter) /
               (static_cast<double>(inst.max_index) * static_cast<double>(inst.diam_h_sub.diameter));
}

}  // namespace

ConjectureInstance make_instance(std::string name, std::vector<ConjectureFactor> factors, std::optional<PermGroup> h,
                                 std::uint64_t threshold) {
  auto inst = assemble(std::move(name), std::move(factors), std::move(h));
  inst.diam_h = group_diameter_exact(inst.h, inst.name + " H", threshold);
  inst.diam_h_sub = group_diameter_exact(inst.h_sub, inst.name + " H'", threshold);
  finish(inst);
  return inst;
}

bool conjecture_k1_check(const ConjectureInstance& inst) {
  if (inst.factors.size() != 1) throw std::invalid_argument("k = 1 check needs exactly one factor");
  return std::uint64_t{inst.diam_h.diameter} <= 4 * inst.max_index * inst.diam_h_sub.diameter;
}

ConjectureReport conjecture_harness(std::vector<ConjectureInstance> instances, std::vector<int> exponents) {
  ConjectureReport rep;
  for (int c : exponents) {
    double worst = 0;
    for (const auto& inst : instances) {
      double k = static_cast<double>(inst.factors.size());
      worst = std::max(worst, inst.ratio / std::pow(k, c));
    }
    rep.empirical_constants.emplace_back(c, worst);
  }
  rep.instances = std::move(instances);
  return rep;
}

std::vector<ConjectureInstance> k1_fixtures(std::size_t min_count) {
  std::vector<ConjectureInstance> out;
  for (const auto& [gname, g1] : small_groups()) {
    if (g1.order() == 1) continue;
    ElementTable t(g1);
    auto subs = all_subgroups(t);
    auto classes = subgroup_classes(t);
    std::map<std::vector<std::uint32_t>, DiameterRecord> cache;
    auto key = [](const ElementSet& s) {
      std::vector<std::uint32_t> k;
      for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) k.push_back(static_cast<std::uint32_t>(i));
      return k;
    };
    auto diam_of = [&](const Subgroup& s) -> const DiameterRecord& {
      auto k = key(s.members);
      auto it = cache.find(k);
      if (it == cache.end()) it = cache.emplace(k, group_diameter_exact(to_group(t, s))).first;
      return it->second;
    };
    for (std::size_t hi = 0; hi < classes.size(); ++hi) {
      const auto& hsub = classes[hi].representative;
      for (std::size_t si = 0; si < subs.size(); ++si) {
        Subgroup meet = generated_subgroup(t, key(hsub.members & subs[si].members));
        std::string name = gname + " H#" + std::to_string(hi) + " G'#" + std::to_string(si);
        auto inst = assemble(name, {{g1, to_group(t, subs[si])}}, to_group(t, hsub));
        if (inst.h_sub.order() != meet.order()) throw std::logic_error("intersection mismatch");
        inst.diam_h = diam_of(hsub);
        inst.diam_h_sub = diam_of(meet);
        finish(inst);
        out.push_back(std::move(inst));
      }
    }
  }
  if (out.size() < min_count) throw std::logic_error("too few k = 1 fixtures");
  return out;
}

std::vector<ConjectureInstance> k2_fixtures() {
  PermGroup s3(3, make::symmetric(3)), a3(3, make::alternating(3));
  PermGroup c2(2, make::cyclic(2)), c3(3, make::cyclic(3));
  std::vector<ConjectureInstance> out;
  out.push_back(make_instance("Sym3 x Sym3 / Alt3 x Alt3", {{s3, a3}, {s3, a3}}, std::nullopt, 36));
  out.push_back(make_instance("Sym3 x C2 / Alt3 x 1", {{s3, a3}, {c2, PermGroup::trivial(2)}}));
  out.push_back(make_instance("Sym3 x Sym3 / Sym3 x Alt3", {{s3, s3}, {s3, a3}}, std::nullopt, 36));
  // Coprime cyclic factors: not sections of one group, no pass/fail meaning.
  out.push_back(make_instance("C2 x C3 / 1 x 1", {{c2, PermGroup::trivial(2)}, {c3, PermGroup::trivial(3)}}));
  out.push_back(make_instance("C3 x C3 / C3 x 1", {{c3, c3}, {c3, PermGroup::trivial(3)}}));
  // H a diagonal subgroup of Sym3 x Sym3.
  std::vector<Permutation> diag;
  for (const auto& s : s3.generators()) diag.push_back(compose(shift(s, 0, 6), shift(s, 3, 6)));
  out.push_back(make_instance("diag Sym3 / Alt3 x Alt3", {{s3, a3}, {s3, a3}}, PermGroup(6, diag)));
  return out;
}

namespace {

nlohmann::ordered_json record_json(const DiameterRecord& r) {
  nlohmann::ordered_json j;
  j["group"] = r.group;
  j["degree"] = r.degree;
  auto gens = nlohmann::ordered_json::array();
  for (const auto& s : r.generators) gens.push_back(s.to_string());
  j["generators"] = gens;
  j["diameter"] = r.diameter;
  j["mode"] = to_string(r.mode);
  j["sets_examined"] = r.sets_examined;
  return j;
}

}  // namespace

std::string to_json_line(const DiameterRecord& r) { return record_json(r).dump(); }

std::string to_json_line(const ConjectureInstance& c) {
  nlohmann::ordered_json j;
  j["name"] = c.name;
  j["k"] = c.factors.size();
  j["order_H"] = c.h.order().str();
  j["order_Hprime"] = c.h_sub.order().str();
  j["max_index"] = c.max_index;
  j["diam_H"] = record_json(c.diam_h);
  j["diam_Hprime"] = record_json(c.diam_h_sub);
  j["ratio"] = c.ratio;
  return j.dump();
}

std::string ratio_csv(const ConjectureReport& r) {
  std::ostringstream os;
  os << "name,k,order_H,order_Hprime,max_index,diam_H,diam_Hprime,ratio\n";
  for (const auto& c : r.instances)
    os << '"' << c.name << "\"," << c.factors.size() << ',' << c.h.order() << ',' << c.h_sub.order() << ','
       << c.max_index << ',' << c.diam_h.diameter << ',' << c.diam_h_sub.diameter << ',' << c.ratio << '\n';
  return os.str();
}

}  // namespace permtree
