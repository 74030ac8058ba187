#include <doctest.h>

#include <random>
#include <set>

#include "permtree/coset.hpp"
#include "permtree/corpus.hpp"
#include "permtree/element_table.hpp"
#include "permtree/errors.hpp"
#include "permtree/bfs.hpp"
#include "permtree/group_ops.hpp"

using namespace permtree;

namespace {

Permutation P(const char* text, std::size_t n) { return Permutation::parse(text, n); }

/// Reference coset diameter: cosets as explicit element sets.
std::uint32_t brute_schreier_diameter(const PermGroup& g, const PermGroup& h, const std::vector<Permutation>& s) {
  auto hs = h.elements();
  auto gs = g.elements();
  std::vector<std::set<Permutation>> cosets;
  auto find = [&](const Permutation& x) -> std::size_t {
    for (std::size_t i = 0; i < cosets.size(); ++i)
      if (cosets[i].count(x)) return i;
    return cosets.size();
  };
  for (const auto& x : gs)
    if (find(x) == cosets.size()) {
      std::set<Permutation> c;
      for (const auto& y : hs) c.insert(compose(x, y));
      cosets.push_back(std::move(c));
    }
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& x : s) {
    std::vector<std::uint32_t> row;
    for (const auto& c : cosets) row.push_back(static_cast<std::uint32_t>(find(compose(x, *c.begin()))));
    rows.push_back(row);
  }
  return bfs::diameter_serial(Csr::from_rows(static_cast<std::uint32_t>(cosets.size()), rows));
}

}  // namespace

TEST_SUITE("coset-schreier") {

TEST_CASE("coset space examples") {
  PermGroup s3(3, make::symmetric(3));
  CosetSpace c1(s3, PermGroup(3, {P("(0 1)", 3)}));
  CHECK(c1.index() == 3);
  CHECK(c1.transversal().front().is_identity());
  PermGroup a5(5, make::alternating(5));
  CHECK(CosetSpace(a5, pointwise_stabilizer(a5, DomainSubset(5, {0}))).index() == 5);
  CosetSpace full(a5, a5);
  CHECK(full.index() == 1);
  CHECK_THROWS_AS(CosetSpace(PermGroup(3, make::cyclic(3)), PermGroup(3, {P("(0 1)", 3)})),
                  std::invalid_argument);
  CHECK_THROWS_AS(CosetSpace(a5, PermGroup::trivial(5), 10), ResourceLimitError);
}

TEST_CASE("canonical representatives separate cosets") {
  PermGroup g(6, make::wreath(make::symmetric(3), 3, make::symmetric(2), 2));
  PermGroup h(6, {P("(0 1)", 6), P("(3 4 5)", 6)});
  CosetSpace space(g, h);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    auto x = g.random_element(rng), y = g.random_element(rng);
    bool same = h.contains(compose(x.inverse(), y));
    CHECK((space.coset_of(x) == space.coset_of(y)) == same);
    CHECK(space.canonical(x) <= x);
  }
  for (const auto& r : space.transversal()) CHECK(space.canonical(r) == r);
}

TEST_CASE("schreier diameter examples") {
  PermGroup s3(3, make::symmetric(3));
  std::vector<Permutation> s{Permutation(3), P("(0 1)", 3), P("(0 1 2)", 3), P("(0 2 1)", 3)};
  CHECK(schreier_diameter(s3, PermGroup(3, {P("(0 1)", 3)}), s) == 1);
  CHECK(schreier_diameter(s3, s3, s) == 0);
  PermGroup c5(5, make::cyclic(5));
  auto c = P("(0 1 2 3 4)", 5);
  CHECK(schreier_diameter(c5, PermGroup::trivial(5), {Permutation(5), c, c.inverse()}) == 2);
  CHECK_THROWS(schreier_diameter(s3, PermGroup::trivial(3), {P("(0 1)", 3)}));
}

TEST_CASE("schreier diameter matches explicit coset sets") {
  std::mt19937_64 rng(9);
  for (const auto& ng : small_groups()) {
    ElementTable t(ng.group, 64);
    auto subs = all_subgroups(t);
    for (std::size_t k = 0; k < subs.size(); k += 3) {
      auto h = to_group(t, subs[k]);
      std::vector<Permutation> s = ng.group.generators();
      s.push_back(ng.group.random_element(rng));
      CHECK_MESSAGE(schreier_diameter(ng.group, h, s) == brute_schreier_diameter(ng.group, h, s), ng.name);
    }
  }
}

TEST_CASE("diam_pair_exact examples") {
  PermGroup s3(3, make::symmetric(3));
  auto d = diam_pair_exact(s3, PermGroup::trivial(3));
  CHECK(d.diameter == 3);
  CHECK(generates(s3, d.witness));
  CHECK(schreier_diameter(s3, PermGroup::trivial(3), d.witness) == 3);
  CHECK(diam_pair_exact(PermGroup(2, make::cyclic(2)), PermGroup::trivial(2)).diameter == 1);
  CHECK(diam_pair_exact(s3, s3).diameter == 0);
  CHECK_THROWS_AS(diam_pair_exact(PermGroup(5, make::alternating(5)), PermGroup::trivial(5)), ResourceLimitError);
}

TEST_CASE("diam_pair_exact dominates every fixed generating set") {
  std::mt19937_64 rng(21);
  for (const auto& ng : small_groups()) {
    auto h = PermGroup::trivial(ng.group.degree());
    auto d = diam_pair_exact(ng.group, h).diameter;
    for (int t = 0; t < 10; ++t) {
      std::vector<Permutation> s = ng.group.generators();
      for (int k = 0; k < t % 3; ++k) s.push_back(ng.group.random_element(rng));
      CHECK(schreier_diameter(ng.group, h, s) <= d);
    }
  }
}

TEST_CASE("schreier generator examples") {
  PermGroup s3(3, make::symmetric(3));
  PermGroup a3(3, make::alternating(3));
  std::vector<Permutation> s{Permutation(3), P("(0 1)", 3), P("(0 1 2)", 3), P("(0 2 1)", 3)};
  auto out = schreier_generators(s3, a3, s);
  std::vector<Permutation> elems;
  for (const auto& x : out.generators) elems.push_back(x.element);
  CHECK(PermGroup(3, elems).same_group(a3));

  auto same = schreier_generators(s3, s3, s);
  elems.clear();
  for (const auto& x : same.generators) elems.push_back(x.element);
  CHECK(same.diameter == 0);
  CHECK(PermGroup(3, elems).same_group(s3));

  PermGroup c4(4, make::cyclic(4));
  auto c = P("(0 1 2 3)", 4);
  PermGroup c2(4, {compose(c, c)});
  auto cyc = schreier_generators(c4, c2, {Permutation(4), c, c.inverse()});
  elems.clear();
  for (const auto& x : cyc.generators) elems.push_back(x.element);
  CHECK(PermGroup(4, elems).same_group(c2));
  CHECK_THROWS(schreier_generators(s3, a3, {Permutation(3), P("(0 1 2)", 3), P("(0 1)", 3)}));
}

TEST_CASE("schreier generators: membership, generation and word certificates") {
  std::mt19937_64 rng(1);
  for (const auto& ng : small_groups()) {
    ElementTable t(ng.group, 64);
    for (const auto& sub : all_subgroups(t)) {
      auto h = to_group(t, sub);
      auto s = with_inverses(ng.group.generators());
      auto out = schreier_generators(ng.group, h, s);
      std::vector<Permutation> elems;
      for (const auto& x : out.generators) {
        CHECK(h.contains(x.element));
        CHECK(x.word.size() <= 2 * out.diameter + 1);
        std::vector<Permutation> word;
        for (auto i : x.word) word.push_back(s[i]);
        CHECK(word_product(word, ng.group.degree()) == x.element);
        elems.push_back(x.element);
      }
      CHECK(PermGroup(ng.group.degree(), elems).same_group(h));
    }
  }
}

TEST_CASE("extend generating set examples") {
  PermGroup s3(3, make::symmetric(3));
  PermGroup a3(3, make::alternating(3));
  std::vector<Permutation> sp{Permutation(3), P("(0 1 2)", 3), P("(0 2 1)", 3)};
  auto s = extend_generating_set(s3, a3, sp);
  CHECK(s.size() == sp.size() + 1);
  CHECK(!s.back().is_even());
  CHECK(generates(s3, s));
  CHECK(extend_generating_set(s3, s3, make::symmetric(3)) == make::symmetric(3));
  PermGroup s4(4, make::symmetric(4));
  std::vector<Permutation> t{Permutation(4), P("(0 1)", 4)};
  auto ext = extend_generating_set(s4, PermGroup(4, {P("(0 1)", 4)}), t);
  CHECK(ext.size() <= t.size() + 3);
  CHECK(PermGroup(4, ext).order() == 24);
}

TEST_CASE("induced subgraph through phi") {
  for (const auto& ng : small_groups()) {
    ElementTable t(ng.group, 64);
    auto subs = all_subgroups(t);
    for (std::size_t a = 0; a < subs.size(); a += 2)
      for (std::size_t b = 0; b < subs.size(); b += 3) {
        auto gp = to_group(t, subs[a]);
        auto h = to_group(t, subs[b]);
        auto sp = with_inverses(gp.generators());
        auto s = extend_generating_set(ng.group, gp, sp);
        auto rep = check_induced_subgraph(ng.group, h, gp, sp, s);
        CHECK_MESSAGE(rep.holds(), ng.name);
      }
  }
}

TEST_CASE("graph export") {
  PermGroup s3(3, make::symmetric(3));
  auto space = std::make_shared<const CosetSpace>(s3, PermGroup(3, {P("(0 1)", 3)}));
  auto graph = schreier_graph(space, {P("(0 1)", 3), P("(0 1 2)", 3)});
  auto bytes = to_binary(graph);
  CHECK(bytes.size() == 8 + 4 * 3 * 2);
  CHECK(rows_from_binary(bytes) == graph.rows);
  auto dot = to_dot(graph);
  CHECK(dot.find("graph schreier") == 0);
  CHECK(dot.find("label=\"()\"") != std::string::npos);
}

TEST_CASE("parallel and serial BFS agree") {
  std::mt19937_64 rng(4);
  for (const auto& ng : transitive_corpus()) {
    if (ng.group.order() > 5000) continue;
    std::vector<Permutation> s = ng.group.generators();
    s.push_back(ng.group.random_element(rng));
    CHECK(bfs::cayley_diameter_serial(ng.group, s) == bfs::cayley_diameter_parallel(ng.group, s));
    auto space = std::make_shared<const CosetSpace>(ng.group, pointwise_stabilizer(ng.group, DomainSubset(ng.group.degree(), {0})));
    auto csr = schreier_graph(space, s).undirected();
    CHECK(bfs::diameter_serial(csr) == bfs::diameter_parallel(csr));
    CHECK(bfs::distances_serial(csr, 0) == bfs::distances_parallel(csr, 0));
  }
  // Cayley BFS against the coset BFS with H trivial.
  PermGroup s4(4, make::symmetric(4));
  CHECK(bfs::cayley_diameter_serial(s4, s4.generators()) == schreier_diameter(s4, PermGroup::trivial(4), s4.generators()));
  CHECK(bfs::cayley_diameter_serial(s4, {P("(0 1 2 3)", 4)}) == kUnreachable);
}

}
