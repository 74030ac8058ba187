#include "permtree/verify.hpp"

#include <numeric>
#include <random>
#include <sstream>

#include "permtree/corpus.hpp"
#include "permtree/element_table.hpp"
#include "permtree/group_ops.hpp"
#include "permtree/oracles.hpp"
#include "permtree/serialize.hpp"

namespace permtree {

bool VerifyReport::passed() const {
  for (const auto& m : modules)
    if (!m.passed()) return false;
  return true;
}

std::string VerifyReport::text() const {
  std::ostringstream os;
  for (const auto& m : modules) {
    os << (m.passed() ? "ok   " : "FAIL ") << m.module << " (" << m.checks << " checks";
    if (!m.passed()) os << ", " << m.failures.size() << " failures";
    os << ")\n";
    for (const auto& f : m.failures) os << "     " << f << "\n";
  }
  os << (passed() ? "all invariants hold\n" : "invariant violations found\n");
  return os.str();
}

namespace {

struct Checker {
  ModuleResult result;
  explicit Checker(std::string name) { result.module = std::move(name); }
  void expect(bool ok, const std::string& what) {
    ++result.checks;
    if (!ok) result.failures.push_back(what);
  }
  template <class F>
  void guarded(const std::string& what, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      ++result.checks;
      result.failures.push_back(what + ": threw " + e.what());
    }
  }
};

ModuleResult perm_core(const std::vector<NamedGroup>& corpus, std::mt19937_64& rng, std::size_t samples) {
  Checker c("perm-core");
  for (const auto& [name, g] : corpus) {
    c.guarded(name, [&] {
      for (std::size_t k = 0; k < samples; ++k) {
        auto x = g.random_element(rng), y = g.random_element(rng);
        c.expect(g.contains(x) && g.contains(compose(x, y)), name + ": closure under products");
        c.expect(compose(x, x.inverse()).is_identity(), name + ": inverse");
        if (x.is_even()) {
          auto word = three_cycle_decompose(x);
          c.expect(word_product(word, x.degree()) == x, name + ": 3-cycle decomposition");
        }
      }
      if (g.order() <= 5040)
        c.expect(closure_elements(g.degree(), g.generators()).size() == g.order(), name + ": order by closure");
    });
  }
  return c.result;
}

ModuleResult coset_schreier(const std::vector<NamedGroup>& small) {
  Checker c("coset-schreier");
  for (const auto& [name, g] : small) {
    if (g.order() == 1) continue;
    c.guarded(name, [&] {
      ElementTable t(g);
      auto s = with_inverses(g.generators());
      for (const auto& sub : subgroup_classes(t)) {
        PermGroup h = to_group(t, sub.representative);
        auto out = schreier_generators(g, h, s);
        std::vector<Permutation> elems;
        for (const auto& u : out.generators) {
          elems.push_back(u.element);
          std::vector<Permutation> letters;
          for (auto i : u.word) letters.push_back(s[i]);
          c.expect(word_product(letters, g.degree()) == u.element, name + ": Schreier word spells its element");
          c.expect(u.word.size() <= 2 * out.diameter + 1, name + ": Schreier word length <= 2d+1");
          c.expect(h.contains(u.element), name + ": Schreier generator lies in H");
        }
        c.expect(PermGroup(g.degree(), elems).same_group(h), name + ": Schreier generators generate H");
      }
    });
  }
  return c.result;
}

ModuleResult tree_and_cuts(const std::vector<NamedGroup>& corpus, ModuleResult& cuts_out, ModuleResult& ser_out) {
  Checker c("structure-tree"), cuts("cuts"), ser("serialize");
  for (const auto& [name, g] : corpus) {
    c.guarded(name, [&] {
      auto raw = build_structure_tree(g);
      auto rep = validate_tree(raw);
      c.expect(rep.passed(), name + " (unaugmented): " + rep.summary());
      auto t = augment_tree(raw);
      auto arep = validate_tree(t);
      c.expect(arep.passed(), name + " (augmented): " + arep.summary());
      bool giant = is_giant(g, DomainSubset::full(g.degree())) != Giant::NEITHER;
      for (std::size_t r = 1; r <= 3; ++r) {
        auto sys = assemble_cuts(t, r);
        auto v = validate_cuts(t, sys);
        cuts.expect(v.passed(), name + " r=" + std::to_string(r) + ": " + v.summary());
        auto mc = verify_mc_bounds(sys, g.degree(), giant);
        cuts.expect(mc.passed(), name + " r=" + std::to_string(r) + ": " + mc.summary());
        if (r == 3) {
          auto text = dump(document_json(t, &sys));
          auto doc = document_from_json(Json::parse(text));
          ser.expect(doc.cuts && dump(document_json(doc.tree, &*doc.cuts)) == text, name + ": JSON round trip");
        }
      }
    });
  }
  cuts_out = cuts.result;
  ser_out = ser.result;
  return c.result;
}

ModuleResult bounds_module(const std::vector<NamedGroup>& corpus) {
  Checker c("bounds");
  for (const auto& [name, g] : corpus) {
    c.guarded(name, [&] {
      auto sys = assemble_cuts(augment_tree(build_structure_tree(g)), 3);
      ConstantConfig cfg;
      auto rep = total_bound(sys, g.degree(), cfg, {});
      Real sum = 0;
      for (const auto& e : rep.ledger) {
        c.expect(e.log_factor >= 0, name + ": non-negative factor");
        sum += e.log_factor;
      }
      c.expect(sum == rep.total_log, name + ": ledger sums to the total");
      c.expect(abs(AuditReal(rep.total_log) - rep.audit_total_log) <= AuditReal("1e-40") * (1 + rep.audit_total_log),
               name + ": audit total agrees");
      for (const char* bump : {"C1=3", "C2=3", "C3=3"}) {
        ConstantConfig more = cfg;
        more.apply(bump);
        c.expect(total_bound(sys, g.degree(), more, {}).total_log >= rep.total_log, name + ": monotone in " + bump);
      }
    });
  }
  for (int e : {50, 100, 200}) {
    auto rep = check_induction_inequalities(pow(Real(10), e));
    c.expect(rep.passed(), "induction steps at 10^" + std::to_string(e));
  }
  return c.result;
}

ModuleResult oracles_module(const std::vector<NamedGroup>& small, std::mt19937_64& rng, const VerifyOptions& opt) {
  Checker c("oracles");
  for (const auto& [name, g] : small) {
    if (g.order() == 1) continue;
    c.guarded(name, [&] {
      auto exact = group_diameter_exact(g);
      auto sampled = sampled_diameter(g, rng, opt.samples);
      c.expect(sampled.diameter <= exact.diameter, name + ": exact diameter dominates samples");
    });
  }
  c.guarded("subgroup index", [&] {
    for (std::size_t n = 5; n <= (opt.include_alt7 ? 7u : 6u); ++n)
      c.expect(min_proper_subgroup_index(n) == n, "min index of Alt(" + std::to_string(n) + ")");
  });
  c.guarded("propagation", [&] {
    for (std::size_t n = 5; n <= 8; ++n) {
      std::vector<Point> a((2 * n + 2) / 3);
      std::iota(a.begin(), a.end(), 0);
      for (const auto& g : {PermGroup(n, make::alternating(n)), PermGroup(n, make::symmetric(n))}) {
        auto out = propagate_three_cycles(g, DomainSubset(n, a));
        c.expect(PermGroup(n, out.three_cycles).order() * 2 == factorial(n), "propagation on degree " + std::to_string(n));
      }
    }
  });
  c.guarded("k = 1", [&] {
    for (const auto& inst : k1_fixtures()) c.expect(conjecture_k1_check(inst), inst.name + ": k = 1 bound");
  });
  return c.result;
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  auto corpus = transitive_corpus();
  auto small = small_groups();
  VerifyReport rep;
  rep.modules.push_back(perm_core(corpus, rng, opt.samples));
  rep.modules.push_back(coset_schreier(small));
  ModuleResult cuts, ser;
  rep.modules.push_back(tree_and_cuts(corpus, cuts, ser));
  rep.modules.push_back(cuts);
  rep.modules.push_back(bounds_module(corpus));
  rep.modules.push_back(oracles_module(small, rng, opt));
  rep.modules.push_back(ser);
  return rep;
}

}  // namespace permtree
