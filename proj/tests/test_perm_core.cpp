#include <doctest.h>

#include <random>
#include <set>

#include "permtree/corpus.hpp"
#include "permtree/generators_io.hpp"
#include "permtree/group_ops.hpp"

using namespace permtree;

namespace {

Permutation P(const char* text, std::size_t n) { return Permutation::parse(text, n); }

DomainSubset full(std::size_t n) { return DomainSubset::full(n); }

Permutation random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

}  // namespace

TEST_SUITE("perm-core") {

TEST_CASE("compose applies the right factor first") {
  CHECK(compose(P("(0 1 2)", 3), P("(0 1)", 3)) == P("(0 2)", 3));
  auto s = P("(0 3 1)(2 4)", 5);
  CHECK(compose(s, Permutation(5)) == s);
  CHECK(compose(s, s.inverse()).is_identity());
  CHECK_THROWS(compose(P("(0 1)", 2), P("(0 1)", 3)));
}

TEST_CASE("cycle notation round trip and parse errors") {
  auto s = P("(0 1 2)(3 4)", 6);
  CHECK(s.to_string() == "(0 1 2)(3 4)");
  CHECK(P("()", 4).is_identity());
  CHECK(Permutation(4).to_string() == "()");
  CHECK_THROWS(P("(0 5)", 5));
  CHECK_THROWS(P("(0 1 0)", 3));
  CHECK_THROWS(P("0 1", 3));
  CHECK_THROWS(Permutation(std::vector<Point>{0, 0, 1}));
}

TEST_CASE("the two 3-cycle identities pin the product convention") {
  const std::size_t n = 6;
  const Point a = 0, b = 1, c = 2, d = 3, x = 4;
  auto t = [&](Point u, Point v) { return Permutation::from_cycles(n, {{u, v}}); };
  std::vector<Permutation> w1{t(a, b), t(b, d)};
  CHECK(word_product(w1, n) == three_cycle(n, a, d, b));
  std::vector<Permutation> w2{t(a, b), t(c, d)};
  std::vector<Permutation> w3{three_cycle(n, a, c, b), three_cycle(n, b, d, c)};
  CHECK(word_product(w2, n) == word_product(w3, n));
  std::vector<Permutation> w4{three_cycle(n, a, c, b), three_cycle(n, a, b, x), three_cycle(n, c, a, b)};
  CHECK(word_product(w4, n) == three_cycle(n, b, c, x));
}

TEST_CASE("three_cycle_decompose examples") {
  const std::size_t n = 5;
  auto ab_cd = word_product(std::vector<Permutation>{P("(0 1)", n), P("(2 3)", n)}, n);
  auto out = three_cycle_decompose(ab_cd);
  REQUIRE(out.size() == 2);
  CHECK(out[0] == three_cycle(n, 0, 2, 1));
  CHECK(out[1] == three_cycle(n, 1, 3, 2));
  auto ab_bd = word_product(std::vector<Permutation>{P("(0 1)", n), P("(1 3)", n)}, n);
  auto out2 = three_cycle_decompose(ab_bd);
  REQUIRE(out2.size() == 1);
  CHECK(out2[0] == three_cycle(n, 0, 3, 1));
  CHECK(three_cycle_decompose(Permutation(n)).empty());
  CHECK_THROWS(three_cycle_decompose(P("(0 1)", n)));
}

TEST_CASE("decompose and recompose random even permutations") {
  std::mt19937_64 rng(7);
  int checked = 0;
  while (checked < 1000) {
    std::size_t n = 1 + rng() % 12;
    auto s = random_perm(n, rng);
    if (!s.is_even()) continue;
    auto word = three_cycle_decompose(s);
    CHECK(word_product(word, n) == s);
    CHECK(word.size() <= transposition_word(s).size());
    for (const auto& c : word) CHECK(c.support().size() == 3);
    ++checked;
  }
}

TEST_CASE("orbits examples") {
  auto o = orbits({P("(0 1)", 4), P("(1 2)", 4)}, full(4));
  REQUIRE(o.size() == 2);
  CHECK(o[0].points() == std::vector<Point>{0, 1, 2});
  CHECK(o[1].points() == std::vector<Point>{3});
  auto o2 = orbits({Permutation(2)}, full(2));
  CHECK(o2.size() == 2);
  auto o3 = orbits({P("(0 1)(2 3)", 4)}, full(4));
  REQUIRE(o3.size() == 2);
  CHECK(o3[1].points() == std::vector<Point>{2, 3});
  CHECK_THROWS(orbits({P("(0 3)", 4)}, DomainSubset(4, {0, 1})));
}

TEST_CASE("minimal block systems") {
  PermGroup d4(4, {P("(0 1)", 4), P("(2 3)", 4), P("(0 2)(1 3)", 4)});
  auto b = minimal_block_system(d4, full(4));
  REQUIRE(b.count() == 2);
  CHECK(b.blocks[0] == std::vector<Point>{0, 1});
  CHECK(b.blocks[1] == std::vector<Point>{2, 3});
  PermGroup a5(5, make::alternating(5));
  CHECK(minimal_block_system(a5, full(5)).block_size() == 1);
  PermGroup s3(3, make::symmetric(3));
  CHECK(minimal_block_system(s3, full(3)).block_size() == 1);
  CHECK_THROWS(minimal_block_system(PermGroup(4, {P("(0 1)", 4)}), full(4)));
  // C8 has systems with blocks of size 2 and 4; the minimal one is {0,4},...
  PermGroup c8(8, make::cyclic(8));
  auto b8 = minimal_block_system(c8, full(8));
  CHECK(b8.block_size() == 2);
  CHECK(b8.blocks[0] == std::vector<Point>{0, 4});
}

TEST_CASE("block systems agree with exhaustive pair closure and are invariant") {
  for (const auto& ng : transitive_corpus()) {
    const auto& g = ng.group;
    auto dom = full(g.degree());
    auto b = minimal_block_system(g, dom);
    CHECK_MESSAGE(is_block_system(g.generators(), b), ng.name);
    // Reference: smallest nontrivial pair closure over all pairs through 0.
    std::size_t best = g.degree();
    for (Point a = 1; a < g.degree(); ++a) {
      auto cls = pair_block_closure(g.generators(), dom, 0, a);
      std::size_t size = static_cast<std::size_t>(std::count(cls.begin(), cls.end(), cls[0]));
      if (size < g.degree()) best = std::min(best, size);
    }
    if (best == g.degree()) best = 1;
    CHECK_MESSAGE(b.block_size() == best, ng.name);
  }
}

TEST_CASE("order and membership") {
  PermGroup s5(5, {P("(0 1 2 3 4)", 5), P("(0 1)", 5)});
  CHECK(s5.order() == 120);
  CHECK(closure_elements(5, s5.generators()).size() == 120);
  PermGroup s3(3, make::symmetric(3));
  CHECK(pointwise_stabilizer(s3, DomainSubset(3, {0})).order() == 2);
  PermGroup d4(4, {P("(0 1)", 4), P("(2 3)", 4), P("(0 2)(1 3)", 4)});
  BlockSystem b{full(4), {{0, 1}, {2, 3}}};
  auto k = kernel_of_block_action(d4, b);
  CHECK(k.order() == 4);
  CHECK(k.same_group(PermGroup(4, {P("(0 1)", 4), P("(2 3)", 4)})));
  CHECK(block_action(d4, b).order() == 2);
}

TEST_CASE("chain order and membership match exhaustive closure on fixtures") {
  std::mt19937_64 rng(11);
  std::vector<NamedGroup> fixtures = small_groups();
  for (auto& ng : transitive_corpus())
    if (ng.group.order() <= 10000) fixtures.push_back(ng);
  for (const auto& ng : fixtures) {
    const auto& g = ng.group;
    auto elems = closure_elements(g.degree(), g.generators());
    CHECK_MESSAGE(g.order() == elems.size(), ng.name);
    std::set<Permutation> inside(elems.begin(), elems.end());
    for (int t = 0; t < 30; ++t) {
      auto x = random_perm(g.degree(), rng);
      CHECK(g.contains(x) == (inside.count(x) > 0));
      auto y = g.random_element(rng);
      CHECK(g.contains(y));
      CHECK(g.unrank(g.rank(y)) == y);
    }
  }
}

TEST_CASE("rank and base-image rank agree") {
  PermGroup g(10, make::wreath(make::symmetric(5), 5, make::cyclic(2), 2));
  std::vector<Point> images(g.levels().size());
  for (std::uint64_t r = 0; r < g.small_order(); r += 97) {
    g.unrank_base_images(r, images);
    auto x = g.unrank(r);
    for (std::size_t j = 0; j < images.size(); ++j) CHECK(images[j] == x(g.levels()[j].base));
    CHECK(g.rank_base_images(images) == r);
  }
}

TEST_CASE("restriction and kernel factorization") {
  PermGroup g(7, make::direct_sum(make::symmetric(4), 4, make::cyclic(3), 3));
  DomainSubset a(7, {0, 1, 2, 3});
  auto r = restriction(g, a);
  auto ker = pointwise_stabilizer(g, a);
  CHECK(r.order() * ker.order() == g.order());
  CHECK_THROWS(restriction(g, DomainSubset(7, {0, 4})));
  for (const auto& ng : transitive_corpus()) {
    auto b = minimal_block_system(ng.group, full(ng.group.degree()));
    if (b.trivial()) continue;
    auto k = kernel_of_block_action(ng.group, b);
    CHECK_MESSAGE(block_action(ng.group, b).order() * k.order() == ng.group.order(), ng.name);
    CHECK(k.is_subgroup_of(ng.group));
  }
}

TEST_CASE("alt preimage") {
  PermGroup g(10, make::wreath(make::cyclic(2), 2, make::symmetric(5), 5));
  auto b = minimal_block_system(g, full(10));
  auto p = alt_preimage(g, b);
  CHECK(p.order() * 2 == g.order());
  CHECK(block_action(p, b).order() == 60);
}

TEST_CASE("setwise stabilizer matches exhaustive filter") {
  std::mt19937_64 rng(3);
  for (const auto& ng : small_groups()) {
    const auto& g = ng.group;
    if (g.degree() < 3) continue;
    for (int t = 0; t < 5; ++t) {
      std::vector<Point> pts;
      for (Point p = 0; p < g.degree(); ++p)
        if (rng() % 2) pts.push_back(p);
      DomainSubset a(g.degree(), pts);
      auto stab = setwise_stabilizer(g, a);
      std::size_t expected = 0;
      for (const auto& x : closure_elements(g.degree(), g.generators())) {
        bool ok = true;
        for (Point p : a) ok = ok && a.contains(x(p));
        expected += ok;
      }
      CHECK_MESSAGE(stab.order() == expected, ng.name);
    }
  }
  PermGroup s6(6, make::symmetric(6));
  CHECK(setwise_stabilizer(s6, DomainSubset(6, {0, 1})).order() == 48);
}

TEST_CASE("giant detection") {
  CHECK(is_giant(PermGroup(5, make::alternating(5)), full(5)) == Giant::ALT);
  CHECK(is_giant(PermGroup(5, make::cyclic(5)), full(5)) == Giant::NEITHER);
  CHECK(is_giant(PermGroup(3, make::symmetric(3)), full(3)) == Giant::SYM);
  PermGroup s22(22, make::symmetric(22));
  CHECK(s22.order() == factorial(22));
  CHECK(is_giant(s22, full(22)) == Giant::SYM);
}

TEST_CASE("generator file parsing") {
  auto f = parse_generators("# alt5\ndegree 5\n(0 1 2)  # three-cycle\n(0 1 2 3 4)\n\n");
  CHECK(f.degree == 5);
  REQUIRE(f.generators.size() == 2);
  CHECK(PermGroup(f.degree, f.generators).order() == 60);
  auto again = parse_generators(format_generators(f.degree, f.generators, "copy"));
  CHECK(again.generators == f.generators);
  CHECK_THROWS(parse_generators("(0 1)\n"));
  CHECK_THROWS(parse_generators("degree 3\n(0 3)\n"));
}

}
