#include <doctest.h>

#include "permtree/corpus.hpp"
#include "permtree/group_ops.hpp"
#include "permtree/tree.hpp"

using namespace permtree;

namespace {

Permutation P(const char* text, std::size_t n) { return Permutation::parse(text, n); }

std::vector<Color> colors_from(const StructureTree& t, std::size_t node) {
  std::vector<Color> out;
  for (auto e : t.out_edges(node)) out.push_back(t.edge(e).color);
  return out;
}

}  // namespace

TEST_SUITE("structure-tree") {

TEST_CASE("Alt(5) natural") {
  PermGroup a5(5, make::alternating(5));
  auto raw = build_structure_tree(a5);
  CHECK(raw.nodes().size() == 1);
  CHECK(validate_tree(raw).passed());
  auto t = augment_tree(raw);
  REQUIRE(t.nodes().size() == 7);
  CHECK(t.edge(0).color == Color::C3);
  CHECK(t.edge(0).payload == 5);
  CHECK(t.node(1).group.is_trivial());
  CHECK(colors_from(t, 1) == std::vector<Color>(5, Color::C2));
  CHECK(t.leaves().size() == 5);
  auto rep = validate_tree(t);
  CHECK_MESSAGE(rep.passed(), rep.summary());
  auto stats = path_stats(t);
  for (const auto& s : stats) CHECK(s.c3_product == 5);
}

TEST_CASE("dihedral square") {
  PermGroup g(4, {P("(0 1)", 4), P("(2 3)", 4), P("(0 2)(1 3)", 4)});
  auto t = augment_tree(build_structure_tree(g));
  // orders 8 -> 4 -> (2, 2) -> (1, 1) -> singletons
  CHECK(t.node(0).group.order() == 8);
  REQUIRE(colors_from(t, 0) == std::vector<Color>{Color::C1});
  CHECK(t.edge(0).payload == 2);
  CHECK(t.node(1).group.order() == 4);
  CHECK(t.node(1).group.same_group(PermGroup(4, {P("(0 1)", 4), P("(2 3)", 4)})));
  CHECK(colors_from(t, 1) == std::vector<Color>{Color::C2, Color::C2});
  for (auto c : t.node(1).children) {
    CHECK(t.node(c).domain.size() == 2);
    CHECK(t.node(c).group.order() == 2);
    REQUIRE(colors_from(t, c) == std::vector<Color>{Color::C1});
    CHECK(t.edge(t.out_edges(c)[0]).payload == 2);
  }
  CHECK(t.leaves().size() == 4);
  CHECK(validate_tree(t).passed("structure"));
}

TEST_CASE("Alt(5) wreath Sym(2)") {
  PermGroup g(10, make::wreath(make::alternating(5), 5, make::symmetric(2), 2));
  auto t = augment_tree(build_structure_tree(g));
  REQUIRE(colors_from(t, 0) == std::vector<Color>{Color::C1});
  CHECK(t.edge(0).payload == 2);
  CHECK(t.node(1).group.order() == 3600);
  REQUIRE(colors_from(t, 1) == std::vector<Color>{Color::C2, Color::C2});
  for (auto c : t.node(1).children) {
    CHECK(t.node(c).group.order() == 60);
    CHECK(colors_from(t, c) == std::vector<Color>{Color::C3});
  }
  auto rep = validate_tree(t);
  CHECK_MESSAGE(rep.passed(), rep.summary());
  for (const auto& s : path_stats(t)) CHECK(s.c3_product == 5);
}

TEST_CASE("Sym block action goes through the Alt preimage") {
  PermGroup g(10, make::wreath(make::cyclic(2), 2, make::symmetric(5), 5));
  auto t = build_structure_tree(g);
  REQUIRE(colors_from(t, 0) == std::vector<Color>{Color::C1});
  CHECK(t.edge(0).payload == 2);
  REQUIRE(colors_from(t, 1) == std::vector<Color>{Color::C3});
  CHECK(t.edge(1).payload == 5);
  CHECK(t.node(2).group.order() == 32);
  CHECK(t.edge(1).blocks.size() == 5);
  auto rep = validate_tree(augment_tree(t));
  CHECK_MESSAGE(rep.passed(), rep.summary());
}

TEST_CASE("augment examples") {
  PermGroup a3(3, make::alternating(3));
  auto t = augment_tree(build_structure_tree(a3));
  REQUIRE(t.edges().size() == 4);
  CHECK(t.edge(0).color == Color::C1);
  CHECK(t.edge(0).payload == 3);
  CHECK(t.leaves().size() == 3);

  auto point = build_structure_tree(PermGroup::trivial(1));
  auto aug = augment_tree(point);
  CHECK(aug.nodes().size() == 1);
  CHECK(aug.edges().empty());
  CHECK(validate_tree(aug).passed());
  CHECK_THROWS_AS(augment_tree(aug), std::logic_error);
}

TEST_CASE("builder errors") {
  PermGroup s3(3, make::symmetric(3));
  CHECK_THROWS_AS(build_structure_tree(s3, DomainSubset(3, {0, 1})), std::invalid_argument);
  TreeConfig bad;
  bad.c3_threshold = 4;
  CHECK_THROWS_AS(build_structure_tree(s3, bad), std::invalid_argument);
}

TEST_CASE("validator flags a forged payload") {
  PermGroup g(4, {P("(0 1)", 4), P("(2 3)", 4), P("(0 2)(1 3)", 4)});
  auto t = build_structure_tree(g);
  StructureTree::Builder b(4);
  b.add_root(t.node(0).group, t.node(0).domain);
  b.add_child(0, t.node(1).group, t.node(1).domain, Color::C1, 3);
  auto forged = b.finish();
  auto rep = validate_tree(forged);
  CHECK_FALSE(rep.passed("structure"));
}

TEST_CASE("tree properties over the corpus") {
  for (const auto& ng : transitive_corpus()) {
    CAPTURE(ng.name);
    auto raw = build_structure_tree(ng.group);
    auto t = augment_tree(raw);
    auto rep = validate_tree(t);
    CHECK_MESSAGE(rep.passed("structure"), rep.summary());
    CHECK_MESSAGE(rep.passed("d"), rep.summary());
    CHECK_MESSAGE(rep.passed("f"), rep.summary());
    CHECK_MESSAGE(rep.passed("giant"), rep.summary());
    CHECK(validate_tree(raw).passed("f"));
    for (auto l : t.leaves()) {
      CHECK(t.node(l).domain.size() == 1);
      CHECK(t.node(l).group.is_trivial());
    }
    for (const auto& e : t.edges()) {
      if (e.color == Color::C1) CHECK(t.node(e.parent).group.order() == e.payload * t.node(e.child).group.order());
      if (e.color == Color::C3)
        CHECK(t.node(e.parent).group.order() ==
              factorial(static_cast<std::uint64_t>(e.payload)) / 2 * t.node(e.child).group.order());
    }
    auto again = augment_tree(build_structure_tree(ng.group));
    CHECK(tree_to_dot(again) == tree_to_dot(t));
  }
}

TEST_CASE("intransitive products") {
  for (const auto& ng : small_groups()) {
    CAPTURE(ng.name);
    auto t = augment_tree(build_structure_tree(ng.group));
    CHECK(validate_tree(t).passed("structure"));
    CHECK(t.leaves().size() == ng.group.degree());
  }
}

}
