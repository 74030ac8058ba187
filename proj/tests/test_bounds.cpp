#include <doctest.h>

#include "permtree/bounds.hpp"
#include "permtree/corpus.hpp"

using namespace permtree;

namespace {

bool close(const Real& a, const Real& b, const Real& tol = Real("1e-40")) {
  return abs(a - b) <= tol * (1 + abs(b));
}

HorizontalCut cut_of(CutKind kind, std::uint64_t m = 0) {
  HorizontalCut c;
  c.kind = kind;
  c.m = m;
  return c;
}

CutSystem system_for(const PermGroup& g, std::size_t r) {
  return assemble_cuts(augment_tree(build_structure_tree(g)), r);
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("cut factors") {
  ConstantConfig cfg;
  AltDiamTable table{{5, {7, true}}};
  CHECK(cut_factor(cut_of(CutKind::C2), 10, cfg, table) == 0);
  CHECK(cut_factor(cut_of(CutKind::SECTION), 10, cfg, table) == 0);

  Real ln10 = log(Real(10));
  CHECK(close(cut_factor(cut_of(CutKind::C3, 5), 10, cfg, table), log(Real(17)) + 4 * ln10 + log(Real(7))));
  // n^(1 + ln^5 n) with C1 = 1
  CHECK(close(cut_factor(cut_of(CutKind::C1), 10, cfg, table), ln10 * (1 + pow(ln10, 5))));
}

TEST_CASE("alt diameter resolution") {
  AltDiamTable table{{5, {7, true}}, {6, {9, false}}};
  auto five = resolve_alt_diam(5, table);
  CHECK(five.source == "table");
  CHECK(close(five.log_value, log(Real(7))));
  // sampled entries are lower bounds, never used
  auto six = resolve_alt_diam(6, table);
  CHECK(six.source == "order");
  CHECK(close(six.log_value, log(Real(360))));
  auto big = resolve_alt_diam(20, table);
  CHECK(big.source == "closed-form");
  CHECK(close(big.log_value, closed_form(Real(20))));
}

TEST_CASE("product of alternating groups") {
  CHECK(product_alt_bound({}, {}) == 0);
  Real d0 = 11;
  Real one = product_alt_bound({5}, {d0});
  CHECK(close(one, log(Real(196) / 243 * 25 * d0)));
  CHECK(one > log(d0));
  CHECK(close(product_alt_bound({5, 6}, {Real(4), Real(9)}), log(Real(196) / 243 * 8 * 30 * 9)));
  CHECK_THROWS_AS(product_alt_bound({4}, {Real(2)}), std::invalid_argument);
  CHECK_THROWS_AS(product_alt_bound({5, 6}, {Real(2)}), std::invalid_argument);
}

TEST_CASE("closed form and comparisons") {
  CHECK_NOTHROW(closed_form(Real(16)));
  CHECK_THROWS_AS(closed_form(Real(2)), std::invalid_argument);
  Real n = exp(exp(Real(2)));
  CHECK(close(closed_form(n), exp(4 / log(Real(2)))));
  CHECK(closed_form(Real(1000000)) < comparison_bounds(Real(1000000)).babai82);
  Real prev = closed_form(Real(16));
  for (int k = 17; k < 400; k += 7) {
    Real cur = closed_form(Real(k));
    CHECK(cur > prev);
    prev = cur;
  }
  for (int e = 6; e <= 300; e += 6) {
    Real big = pow(Real(10), e);
    CHECK(closed_form(big) < comparison_bounds(big).babai82);
  }
}

TEST_CASE("constant overrides") {
  ConstantConfig cfg;
  cfg.apply("C1=2.5,r=2");
  CHECK(cfg.C1 == 2.5);
  CHECK(cfg.r == 2);
  CHECK_THROWS_AS(cfg.apply("C9=1"), std::invalid_argument);
  CHECK_THROWS_AS(cfg.apply("C2=0"), std::invalid_argument);
  CHECK_THROWS_AS(cfg.apply("C2=x"), std::invalid_argument);
  CHECK_THROWS_AS(cfg.apply("C2"), std::invalid_argument);
}

TEST_CASE("Alt(5) ledger") {
  AltDiamTable table{{5, {7, true}}};
  auto rep = total_bound(system_for(PermGroup(5, make::alternating(5)), 3), 5, {}, table);
  Real expect = log(Real(17)) + 4 * log(Real(5)) + log(Real(7));
  CHECK(close(rep.total_log, expect));
  CHECK(rep.alt_used.at(5).source == "table");
  std::size_t c3 = 0;
  for (const auto& e : rep.ledger)
    if (e.kind == CutKind::C3) ++c3;
  CHECK(c3 == 1);
}

TEST_CASE("edgeless tree bound is 1") {
  auto rep = total_bound(system_for(PermGroup::trivial(1), 1), 1, {}, {});
  CHECK(rep.total_log == 0);
}

TEST_CASE("Alt(5) wreath Sym(2) ledger") {
  PermGroup g(10, make::wreath(make::alternating(5), 5, make::symmetric(2), 2));
  auto rep = total_bound(system_for(g, 3), 10, {}, {});
  std::size_t c1 = 0, c3_factors = 0;
  for (const auto& e : rep.ledger) {
    if (e.kind == CutKind::C1) ++c1;
    if (e.kind == CutKind::C3) ++c3_factors;
    if (e.kind == CutKind::C2) CHECK(e.log_factor == 0);
  }
  CHECK(c1 == 1);
  CHECK(c3_factors >= 1);
}

TEST_CASE("corpus ledger properties") {
  for (const auto& [name, g] : transitive_corpus()) {
    CAPTURE(name);
    auto sys = system_for(g, 3);
    ConstantConfig base;
    auto rep = total_bound(sys, g.degree(), base, {});
    Real sum = 0;
    for (const auto& e : rep.ledger) {
      CHECK(e.log_factor >= 0);
      sum += e.log_factor;
    }
    CHECK(sum == rep.total_log);
    CHECK(close(rep.total_log, Real(rep.audit_total_log), Real("1e-45")));
    for (const char* bump : {"C1=2", "C2=2", "C3=2"}) {
      ConstantConfig more = base;
      more.apply(bump);
      CHECK(total_bound(sys, g.degree(), more, {}).total_log >= rep.total_log);
    }
  }
}

TEST_CASE("induction inequalities") {
  for (int e : {50, 100, 200}) {
    CAPTURE(e);
    auto rep = check_induction_inequalities(pow(Real(10), e));
    CHECK(rep.steps.size() == 4);
    for (const auto& s : rep.steps) {
      CAPTURE(s.name);
      CHECK(s.applicable);
      CHECK(s.passed);
      CHECK(s.precision_gap < Real("1e-15"));
    }
    CHECK(rep.passed());
  }
  auto small = check_induction_inequalities(Real(100));
  CHECK_FALSE(small.passed());

  Real n = pow(Real(10), 100);
  auto same = check_induction_inequalities(n, 1.0, n);
  CHECK_FALSE(same.steps[3].applicable);
  CHECK_THROWS_AS(check_induction_inequalities(Real(10)), std::invalid_argument);
}

}
