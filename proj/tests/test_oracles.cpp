#include <doctest.h>

#include <json.hpp>

#include "permtree/corpus.hpp"
#include "permtree/errors.hpp"
#include "permtree/group_ops.hpp"
#include "permtree/oracles.hpp"

using namespace permtree;

namespace {

Permutation perm(std::size_t n, const char* text) { return Permutation::parse(text, n); }

PermGroup embedded_alt(std::size_t n, const std::vector<Point>& a) {
  std::vector<Permutation> gens;
  for (std::size_t k = 2; k < a.size(); ++k) gens.push_back(three_cycle(n, a[0], a[1], a[k]));
  return PermGroup(n, gens);
}

}  // namespace

TEST_SUITE("oracles") {

TEST_CASE("Cayley diameters") {
  PermGroup s3(3, make::symmetric(3));
  CHECK(cayley_diameter(s3, {perm(3, "(0 1)"), perm(3, "(1 2)")}) == 3);
  CHECK(cayley_diameter(s3, {perm(3, "(0 1 2)"), perm(3, "(0 1)")}) == 2);
  CHECK_THROWS_AS(cayley_diameter(s3, {perm(3, "(0 1)")}), std::invalid_argument);
  CHECK_THROWS_AS(cayley_diameter(s3, {perm(3, "(0 1)")}, 2), ResourceLimitError);
}

TEST_CASE("exact group diameters") {
  auto s3 = group_diameter_exact(PermGroup(3, make::symmetric(3)), "Sym(3)");
  CHECK(s3.diameter == 3);
  CHECK(s3.mode == DiameterMode::EXACT_GROUP);
  CHECK(cayley_diameter(PermGroup(3, make::symmetric(3)), s3.generators) == 3);
  CHECK(std::find(s3.generators.begin(), s3.generators.end(), Permutation(3)) != s3.generators.end());

  CHECK(group_diameter_exact(PermGroup(2, make::cyclic(2))).diameter == 1);
  CHECK(group_diameter_exact(PermGroup::trivial(4)).diameter == 1);
  CHECK_THROWS_AS(group_diameter_exact(PermGroup(5, make::alternating(5))), ResourceLimitError);
}

TEST_CASE("minimal-set search agrees with full enumeration") {
  for (const auto& [name, g] : small_groups()) {
    if (g.order() == 1) continue;
    CAPTURE(name);
    auto fast = group_diameter_exact(g);
    auto full = diam_pair_exact(g, PermGroup::trivial(g.degree()));
    CHECK(fast.diameter == full.diameter);
    CHECK(cayley_diameter(g, fast.generators) == fast.diameter);
  }
}

TEST_CASE("exact dominates samples") {
  std::mt19937_64 rng(7);
  for (const auto& [name, g] : small_groups()) {
    if (g.order() == 1) continue;
    CAPTURE(name);
    auto exact = group_diameter_exact(g);
    auto sampled = sampled_diameter(g, rng, 10);
    CHECK(sampled.mode == DiameterMode::SAMPLED_LOWER);
    CHECK(sampled.diameter <= exact.diameter);
  }
}

TEST_CASE("diameter is invariant under relabelling") {
  std::mt19937_64 rng(11);
  for (const auto& [name, g] : transitive_corpus()) {
    if (g.order() > 5000) continue;
    CAPTURE(name);
    PermGroup sym(g.degree(), make::symmetric(g.degree()));
    for (int trial = 0; trial < 3; ++trial) {
      auto s = random_generating_set(g, rng);
      auto x = sym.random_element(rng);
      std::vector<Permutation> moved, conj_gens;
      for (const auto& y : s) moved.push_back(conjugate(y, x));
      for (const auto& y : g.generators()) conj_gens.push_back(conjugate(y, x));
      CHECK(cayley_diameter(g, s) == cayley_diameter(PermGroup(g.degree(), conj_gens), moved));
    }
  }
}

TEST_CASE("alternating diameter table") {
  auto recs = alt_diam_records(5, 3, 5);
  REQUIRE(recs.size() == 3);
  CHECK(recs[0].degree == 3);
  CHECK(recs[0].diameter == 1);
  CHECK(recs[0].mode == DiameterMode::EXACT_GROUP);
  CHECK(recs[1].mode == DiameterMode::EXACT_GROUP);
  CHECK(recs[1].diameter == diam_pair_exact(PermGroup(4, make::alternating(4)), PermGroup::trivial(4)).diameter);
  CHECK(recs[2].mode == DiameterMode::SAMPLED_LOWER);
  auto table = alt_diam_table(5, 3, 5);
  CHECK(table.at(4).exact);
  CHECK_FALSE(table.at(5).exact);
  CHECK(resolve_alt_diam(5, table).source == "order");
}

TEST_CASE("minimum subgroup index of Alt(n)") {
  CHECK(min_proper_subgroup_index(5) == 5);
  CHECK(min_proper_subgroup_index(6) == 6);
  CHECK_THROWS_AS(min_proper_subgroup_index(4), std::invalid_argument);
  CHECK_THROWS_AS(min_proper_subgroup_index(8), std::invalid_argument);
}

TEST_CASE("giant forcing") {
  PermGroup s6(6, make::symmetric(6));
  DomainSubset a(6, {0, 1, 2, 3});
  auto forced = giant_forcing_check(s6, a, embedded_alt(6, {0, 1, 2, 3}));
  CHECK(forced.status == ForcingStatus::FORCED);
  CHECK(forced.failed.empty());

  auto half = giant_forcing_check(s6, DomainSubset(6, {0, 1, 2}), embedded_alt(6, {0, 1, 2}));
  CHECK(half.status == ForcingStatus::PRECONDITION_FAIL);
  CHECK(std::find(half.failed.begin(), half.failed.end(), "|A| < 2n/3") != half.failed.end());

  auto moving = giant_forcing_check(s6, a, PermGroup(6, {perm(6, "(0 4)")}));
  CHECK(moving.failed == std::vector<std::string>{"H does not stabilize A"});

  auto small_h = giant_forcing_check(s6, a, PermGroup(6, {perm(6, "(0 1)(2 3)")}));
  CHECK(small_h.failed == std::vector<std::string>{"H|_A does not contain Alt(A)"});

  PermGroup d6(6, make::dihedral(6));
  auto intrans = giant_forcing_check(PermGroup(6, {perm(6, "(0 1 2 3)")}), a, PermGroup::trivial(6));
  CHECK(intrans.status == ForcingStatus::PRECONDITION_FAIL);
  CHECK(giant_forcing_check(d6, a, PermGroup::trivial(6)).status == ForcingStatus::PRECONDITION_FAIL);
}

TEST_CASE("three-cycle propagation") {
  struct Case {
    PermGroup g;
    std::vector<Point> a;
  };
  std::vector<Case> cases{{PermGroup(6, make::alternating(6)), {0, 1, 2, 3}},
                          {PermGroup(7, make::symmetric(7)), {2, 3, 4, 5, 6}},
                          {PermGroup(5, make::alternating(5)), {1, 2, 3, 4}},
                          {PermGroup(9, make::alternating(9)), {0, 2, 4, 6, 7, 8}}};
  for (const auto& [g, pts] : cases) {
    const std::size_t n = g.degree();
    CAPTURE(n);
    auto out = propagate_three_cycles(g, DomainSubset(n, pts));
    for (const auto& c : out.three_cycles) {
      CHECK(c.support().size() == 3);
      CHECK(c.is_even());
      CHECK(g.contains(c));
    }
    CHECK(out.witnesses.size() == n - pts.size());
    for (const auto& [x, word] : out.witnesses) {
      std::vector<Permutation> letters;
      for (auto i : word) letters.push_back(g.generators()[i]);
      CHECK(std::find(pts.begin(), pts.end(), word_product(letters, n)(x)) != pts.end());
    }
    CHECK(PermGroup(n, out.three_cycles).order() * 2 == factorial(n));
  }
  CHECK_THROWS_AS(propagate_three_cycles(PermGroup(6, make::alternating(6)), DomainSubset(6, {0, 1, 2})),
                  std::invalid_argument);
  CHECK_THROWS_AS(propagate_three_cycles(PermGroup(6, make::dihedral(6)), DomainSubset(6, {0, 1, 2, 3})),
                  std::invalid_argument);
}

TEST_CASE("conjecture with one factor") {
  PermGroup a4(4, make::alternating(4));
  PermGroup v4(4, {perm(4, "(0 1)(2 3)"), perm(4, "(0 2)(1 3)")});
  auto inst = make_instance("Alt4 / V4", {{a4, v4}});
  CHECK(inst.max_index == 3);
  CHECK(inst.h_sub.order() == 4);
  CHECK(conjecture_k1_check(inst));
  CHECK(inst.diam_h.diameter <= 12 * inst.diam_h_sub.diameter);

  auto same = make_instance("Alt4 / Alt4", {{a4, a4}});
  CHECK(same.max_index == 1);
  CHECK(conjecture_k1_check(same));

  CHECK_THROWS_AS(make_instance("bad", {{v4, a4}}), std::invalid_argument);
  auto fixtures = k1_fixtures(100);
  CHECK(fixtures.size() >= 100);
  for (const auto& f : fixtures) CHECK(conjecture_k1_check(f));
}

TEST_CASE("conjecture harness output") {
  auto rep = conjecture_harness(k2_fixtures());
  REQUIRE(rep.instances.size() >= 1);
  const auto& first = rep.instances.front();
  CHECK(first.factors.size() == 2);
  CHECK(first.h.order() == 36);
  CHECK(first.h_sub.order() == 9);
  CHECK_THROWS_AS(conjecture_k1_check(first), std::invalid_argument);
  CHECK(rep.empirical_constants.size() == 3);

  auto csv = ratio_csv(rep);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(rep.instances.size() + 1));
  auto j = nlohmann::json::parse(to_json_line(first));
  CHECK(j["k"] == 2);
  CHECK(j["diam_H"]["mode"] == "EXACT_GROUP");

  auto rec = nlohmann::json::parse(to_json_line(group_diameter_exact(PermGroup(3, make::symmetric(3)), "Sym(3)")));
  CHECK(rec["diameter"] == 3);
  CHECK(rec["group"] == "Sym(3)");
}

}
