#include "permtree/cuts.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

#include "permtree/errors.hpp"
#include "permtree/real.hpp"

namespace permtree {

const char* to_string(CutKind k) {
  switch (k) {
    case CutKind::SECTION: return "SECTION";
    case CutKind::C1: return "C1";
    case CutKind::C2: return "C2";
    case CutKind::C3: return "C3";
  }
  return "?";
}

CutKind cut_kind_from_string(const std::string& s) {
  if (s == "SECTION") return CutKind::SECTION;
  if (s == "C1") return CutKind::C1;
  if (s == "C2") return CutKind::C2;
  if (s == "C3") return CutKind::C3;
  throw std::invalid_argument("unknown cut kind '" + s + "'");
}

std::string HorizontalCut::origin_string() const {
  switch (origin) {
    case CutOrigin::THICK: return "THICK(" + std::to_string(thick_index) + ")";
    case CutOrigin::THIN: return "THIN";
    case CutOrigin::PLAIN: return "PLAIN";
  }
  return "?";
}

std::size_t CutSystem::thick_count() const {
  return static_cast<std::size_t>(
      std::count_if(cuts.begin(), cuts.end(), [](const HorizontalCut& c) { return c.origin == CutOrigin::THICK; }));
}

std::size_t CutSystem::thin_count() const {
  return static_cast<std::size_t>(
      std::count_if(cuts.begin(), cuts.end(), [](const HorizontalCut& c) { return c.origin == CutOrigin::THIN; }));
}

std::size_t CutSystem::count(CutKind k) const {
  return static_cast<std::size_t>(
      std::count_if(cuts.begin(), cuts.end(), [k](const HorizontalCut& c) { return c.kind == k; }));
}

std::size_t CutSystem::thick_position(std::size_t i) const {
  for (std::size_t k = 0; k < cuts.size(); ++k)
    if (cuts[k].origin == CutOrigin::THICK && cuts[k].thick_index == i) return k;
  throw std::out_of_range("no thick cut C_" + std::to_string(i));
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::vector<std::size_t> members_on_path(const StructureTree&, const HorizontalCut& cut,
                                         const std::vector<std::size_t>& path) {
  std::vector<std::size_t> out;
  for (std::size_t d = 0; d < path.size(); ++d) {
    std::size_t v = path[d];
    if (std::binary_search(cut.nodes.begin(), cut.nodes.end(), v)) out.push_back(2 * d);
    if (d > 0 && std::binary_search(cut.edges.begin(), cut.edges.end(), v - 1)) out.push_back(2 * d - 1);
  }
  return out;
}

/// Positions along every path; the sweeps work on these integer arrays.
struct Layout {
  const StructureTree& t;
  std::vector<std::vector<std::size_t>> paths;
  std::vector<std::pair<std::size_t, std::size_t>> range;  // node -> [first, last] path
  std::vector<bool> assigned;                                // edge already in a cut

  explicit Layout(const StructureTree& tree) : t(tree), paths(tree.paths()) {
    range.assign(t.nodes().size(), {kNone, 0});
    for (std::size_t p = 0; p < paths.size(); ++p)
      for (auto v : paths[p]) {
        if (range[v].first == kNone) range[v].first = p;
        range[v].second = p;
      }
    assigned.assign(t.edges().size(), false);
  }

  using Positions = std::vector<long>;

  Positions root_sentinel() const { return Positions(paths.size(), -1); }
  Positions leaf_sentinel() const {
    Positions pos(paths.size());
    for (std::size_t p = 0; p < paths.size(); ++p) pos[p] = static_cast<long>(2 * paths[p].size() - 1);
    return pos;
  }

  Positions positions(const HorizontalCut& cut) const {
    Positions pos(paths.size(), -1);
    for (std::size_t p = 0; p < paths.size(); ++p) {
      auto m = members_on_path(t, cut, paths[p]);
      if (m.size() != 1) throw ValidationError("coverage", "cut does not meet a path exactly once");
      pos[p] = static_cast<long>(m.front());
    }
    return pos;
  }

  void take(const std::vector<HorizontalCut>& cuts) {
    for (const auto& c : cuts)
      for (auto e : c.edges) assigned[e] = true;
  }

  std::size_t edge_at(std::size_t p, long q) const { return paths[p][static_cast<std::size_t>((q + 1) / 2)] - 1; }
  std::size_t node_at(std::size_t p, long q) const { return paths[p][static_cast<std::size_t>(q / 2)]; }
  long node_pos(std::size_t v) const { return static_cast<long>(2 * t.node(v).depth); }

  bool is_target(std::size_t e, Color color) const { return !assigned[e] && t.edge(e).color == color; }

  bool part_has_target(const Positions& lo, const Positions& hi, Color color) const {
    for (std::size_t p = 0; p < paths.size(); ++p)
      for (long q = lo[p] + 1; q < hi[p]; ++q)
        if (q % 2 != 0 && is_target(edge_at(p, q), color)) return true;
    return false;
  }

  /// One cut inside the part (lo, hi). Greedy mode takes largest-degree C3
  /// edges first; sweep mode takes the first target edge on each path,
  /// leftmost path first. Paths left over get the shallowest vertex whose
  /// subtree in the part holds no chosen element and no target edge.
  HorizontalCut cut_in_part(const Positions& lo, const Positions& hi, Color color, bool greedy) {
    std::vector<bool> covered(paths.size(), false);
    HorizontalCut cut;
    auto cover = [&](std::size_t v) {
      for (std::size_t p = range[v].first; p <= range[v].second; ++p) covered[p] = true;
    };
    auto any_covered = [&](std::size_t v) {
      for (std::size_t p = range[v].first; p <= range[v].second; ++p)
        if (covered[p]) return true;
      return false;
    };
    auto choose_edge = [&](std::size_t e) {
      cut.edges.push_back(e);
      cover(t.edge(e).child);
    };

    if (greedy) {
      std::vector<std::size_t> candidates;
      for (const auto& e : t.edges()) {
        if (!is_target(e.id, color)) continue;
        std::size_t p = range[e.child].first;
        long q = node_pos(e.child) - 1;
        if (lo[p] < q && q < hi[p]) candidates.push_back(e.id);
      }
      std::stable_sort(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
        if (t.edge(a).payload != t.edge(b).payload) return t.edge(a).payload > t.edge(b).payload;
        return a < b;
      });
      for (auto e : candidates)
        if (!any_covered(t.edge(e).child)) choose_edge(e);
    }

    auto subtree_clear = [&](std::size_t v) {
      if (any_covered(v)) return false;
      for (std::size_t p = range[v].first; p <= range[v].second; ++p)
        for (long q = node_pos(v) + 1; q < hi[p]; q += 2)
          if (is_target(edge_at(p, q), color)) return false;
      return true;
    };

    for (std::size_t p = 0; p < paths.size(); ++p) {
      if (covered[p]) continue;
      if (!greedy) {
        bool found = false;
        for (long q = lo[p] + 1; q < hi[p] && !found; ++q)
          if (q % 2 != 0 && is_target(edge_at(p, q), color)) {
            choose_edge(edge_at(p, q));
            found = true;
          }
        if (found) continue;
      }
      long start = lo[p] < 0 ? 0 : lo[p] + (lo[p] % 2);
      bool placed = false;
      for (long q = start; q <= hi[p] && !placed; q += 2) {
        std::size_t v = node_at(p, q);
        if (subtree_clear(v)) {
          cut.nodes.push_back(v);
          cover(v);
          placed = true;
        }
      }
      if (!placed) throw ValidationError("coverage", "no admissible vertex on path " + std::to_string(p));
    }

    std::sort(cut.nodes.begin(), cut.nodes.end());
    std::sort(cut.edges.begin(), cut.edges.end());
    for (auto e : cut.edges) {
      assigned[e] = true;
      if (t.edge(e).color == Color::C3) cut.m = std::max(cut.m, static_cast<std::uint64_t>(t.edge(e).payload));
    }
    if (cut.edges.empty()) cut.kind = CutKind::SECTION;
    else cut.kind = color == Color::C1 ? CutKind::C1 : color == Color::C2 ? CutKind::C2 : CutKind::C3;
    return cut;
  }

  /// Repeated sweeps inside (lo, hi) until no target edge remains.
  std::vector<HorizontalCut> sweep_part(Positions lo, const Positions& hi, Color color) {
    std::vector<HorizontalCut> out;
    while (part_has_target(lo, hi, color)) {
      out.push_back(cut_in_part(lo, hi, color, false));
      lo = positions(out.back());
    }
    return out;
  }
};

/// Inserts sweep cuts of `color` between every pair of consecutive cuts.
void sweep_between(const StructureTree& t, CutSystem& sys, Color color, CutOrigin origin,
                   const std::function<std::vector<std::size_t>(std::size_t, std::size_t)>& governing) {
  Layout lay(t);
  lay.take(sys.cuts);
  std::vector<HorizontalCut> merged;
  const std::size_t k = sys.cuts.size();
  for (std::size_t gap = 0; gap <= k; ++gap) {
    auto lo = gap == 0 ? lay.root_sentinel() : lay.positions(sys.cuts[gap - 1]);
    auto hi = gap == k ? lay.leaf_sentinel() : lay.positions(sys.cuts[gap]);
    auto fresh = lay.sweep_part(lo, hi, color);
    auto gov = governing(gap, k);
    for (auto& c : fresh) {
      c.origin = origin;
      c.governing = gov;
      merged.push_back(std::move(c));
    }
    if (gap < k) merged.push_back(sys.cuts[gap]);
  }
  sys.cuts = std::move(merged);
}

}  // namespace

std::size_t cut_position_on_path(const StructureTree& t, const HorizontalCut& cut,
                                 const std::vector<std::size_t>& path) {
  auto m = members_on_path(t, cut, path);
  if (m.size() != 1) throw ValidationError("coverage", "cut does not meet the path exactly once");
  return m.front();
}

CutSystem build_thick_cuts(const StructureTree& t, std::size_t r) {
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  if (r > 16) throw ResourceLimitError("r too large");
  CutSystem sys;
  sys.r = r;
  if (t.edges().empty()) return sys;
  Layout lay(t);

  struct Part {
    Layout::Positions lo, hi;
    std::vector<std::size_t> governing;
  };
  // Boundaries in descent order; parts sit between consecutive entries.
  std::vector<HorizontalCut> order;
  std::vector<Part> parts{{lay.root_sentinel(), lay.leaf_sentinel(), {}}};
  std::size_t next_index = 1;
  for (std::size_t level = 0; level < r; ++level) {
    std::vector<Part> next_parts;
    std::vector<HorizontalCut> next_order;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      Part& part = parts[k];
      HorizontalCut cut = lay.cut_in_part(part.lo, part.hi, Color::C3, true);
      cut.origin = CutOrigin::THICK;
      cut.thick_index = next_index++;
      cut.governing = part.governing;
      auto mid = lay.positions(cut);
      auto gov = part.governing;
      gov.push_back(cut.thick_index);
      next_parts.push_back({part.lo, mid, gov});
      next_parts.push_back({mid, part.hi, gov});
      if (k > 0) next_order.push_back(order[k - 1]);
      next_order.push_back(std::move(cut));
    }
    order = std::move(next_order);
    parts = std::move(next_parts);
  }
  sys.cuts = std::move(order);
  return sys;
}

namespace {

std::vector<std::size_t> part_chain(const CutSystem& sys, std::size_t gap, std::size_t k) {
  // The part between consecutive thick cuts is governed by the deeper-level
  // neighbour and everything governing it.
  const HorizontalCut* best = nullptr;
  for (std::size_t idx : {gap == 0 ? kNone : gap - 1, gap == k ? kNone : gap}) {
    if (idx == kNone) continue;
    const auto& c = sys.cuts[idx];
    if (!best || c.governing.size() > best->governing.size()) best = &c;
  }
  if (!best) return {};
  auto chain = best->governing;
  chain.push_back(best->thick_index);
  return chain;
}

}  // namespace

void build_thin_cuts(const StructureTree& t, CutSystem& sys) {
  if (t.edges().empty()) return;
  const CutSystem thick = sys;
  sweep_between(t, sys, Color::C3, CutOrigin::THIN,
                [&](std::size_t gap, std::size_t k) { return part_chain(thick, gap, k); });
}

void build_c1_cuts(const StructureTree& t, CutSystem& sys) {
  if (t.edges().empty()) return;
  sweep_between(t, sys, Color::C1, CutOrigin::PLAIN, [](std::size_t, std::size_t) { return std::vector<std::size_t>{}; });
}

void build_c2_cuts(const StructureTree& t, CutSystem& sys) {
  if (t.edges().empty()) return;
  sweep_between(t, sys, Color::C2, CutOrigin::PLAIN, [](std::size_t, std::size_t) { return std::vector<std::size_t>{}; });
}

CutSystem assemble_cuts(const StructureTree& t, std::size_t r) {
  CutSystem sys = build_thick_cuts(t, r);
  build_thin_cuts(t, sys);
  build_c1_cuts(t, sys);
  build_c2_cuts(t, sys);
  auto report = validate_cuts(t, sys);
  for (const auto& c : report.clauses)
    if (!c.passed) throw ValidationError(c.clause, c.violations.empty() ? "violated" : c.violations.front());
  return sys;
}

namespace {

ClauseResult clause(std::string name) {
  ClauseResult c;
  c.clause = std::move(name);
  return c;
}

void fail(ClauseResult& c, std::string why) {
  c.passed = false;
  if (c.violations.size() < 50) c.violations.push_back(std::move(why));
}

std::string cut_name(const CutSystem& sys, std::size_t k) {
  return "cut " + std::to_string(k) + " [" + to_string(sys.cuts[k].kind) + ", " + sys.cuts[k].origin_string() + "]";
}

}  // namespace

ValidationReport validate_cuts(const StructureTree& t, const CutSystem& sys) {
  ValidationReport report;
  auto paths = t.paths();
  const std::size_t k = sys.cuts.size();

  auto coverage = clause("coverage");
  std::vector<std::vector<long>> pos(k, std::vector<long>(paths.size(), -1));
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t p = 0; p < paths.size(); ++p) {
      auto m = members_on_path(t, sys.cuts[c], paths[p]);
      if (m.size() != 1)
        fail(coverage, cut_name(sys, c) + " meets path " + std::to_string(p) + " " + std::to_string(m.size()) + " times");
      else
        pos[c][p] = static_cast<long>(m.front());
    }
  report.clauses.push_back(coverage);

  auto kinds = clause("kinds");
  for (std::size_t c = 0; c < k; ++c) {
    const auto& cut = sys.cuts[c];
    std::uint64_t m = 0;
    for (auto e : cut.edges) {
      const auto& edge = t.edge(e);
      CutKind want = edge.color == Color::C1 ? CutKind::C1 : edge.color == Color::C2 ? CutKind::C2 : CutKind::C3;
      if (want != cut.kind) fail(kinds, cut_name(sys, c) + " holds an edge of color " + to_string(edge.color));
      if (edge.color == Color::C3) m = std::max(m, static_cast<std::uint64_t>(edge.payload));
    }
    if (cut.edges.empty() != (cut.kind == CutKind::SECTION)) fail(kinds, cut_name(sys, c) + " kind disagrees with members");
    if (cut.m != m) fail(kinds, cut_name(sys, c) + " has wrong m");
    if (cut.origin != CutOrigin::PLAIN && cut.kind != CutKind::C3 && cut.kind != CutKind::SECTION)
      fail(kinds, cut_name(sys, c) + " is a C3 cut holding other edges");
    if (cut.origin == CutOrigin::THIN && cut.kind != CutKind::C3) fail(kinds, cut_name(sys, c) + " thin cut without edges");
  }
  report.clauses.push_back(kinds);

  auto order = clause("non-crossing");
  if (coverage.passed)
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        for (std::size_t p = 0; p < paths.size(); ++p)
          if (pos[a][p] > pos[b][p]) {
            fail(order, cut_name(sys, a) + " lies below " + cut_name(sys, b) + " on path " + std::to_string(p));
            break;
          }
  report.clauses.push_back(order);

  auto partition = clause("edge-partition");
  std::vector<int> hits(t.edges().size(), 0);
  for (const auto& cut : sys.cuts)
    for (auto e : cut.edges) ++hits[e];
  for (std::size_t e = 0; e < hits.size(); ++e)
    if (hits[e] != 1) fail(partition, "edge " + std::to_string(e) + " lies in " + std::to_string(hits[e]) + " cuts");
  report.clauses.push_back(partition);

  auto thick = clause("thick-count");
  std::size_t expected = t.edges().empty() ? 0 : (std::size_t{1} << sys.r) - 1;
  if (sys.thick_count() != expected)
    fail(thick, std::to_string(sys.thick_count()) + " thick cuts, expected " + std::to_string(expected));
  report.clauses.push_back(thick);

  auto thin = clause("thin-count");
  const std::size_t n = t.empty() ? 0 : t.node(0).domain.size();
  if (n > 1) {
    Real cap = ceil(Real(std::size_t{1} << sys.r) * log(Real(n)) / log(Real(5)));
    if (Real(sys.thin_count()) > cap)
      fail(thin, std::to_string(sys.thin_count()) + " thin cuts exceed " + cap.str());
  } else if (sys.thin_count() != 0) {
    fail(thin, "thin cuts on a one-point tree");
  }
  report.clauses.push_back(thin);

  auto mono = clause("monotonicity");
  if (coverage.passed) {
    std::map<std::size_t, std::size_t> where;
    for (std::size_t c = 0; c < k; ++c)
      if (sys.cuts[c].origin == CutOrigin::THICK) where[sys.cuts[c].thick_index] = c;
    for (std::size_t c = 0; c < k; ++c) {
      const auto& cut = sys.cuts[c];
      if (cut.origin == CutOrigin::PLAIN || cut.governing.empty()) continue;
      for (auto e : cut.edges) {
        const auto& edge = t.edge(e);
        bool witnessed = false;
        for (std::size_t p = 0; p < paths.size() && !witnessed; ++p) {
          if (std::find(paths[p].begin(), paths[p].end(), edge.child) == paths[p].end()) continue;
          bool ok = true;
          for (auto g : cut.governing) {
            auto it = where.find(g);
            if (it == where.end()) {
              ok = false;
              break;
            }
            long q = pos[it->second][p];
            if (q % 2 == 0) {
              ok = false;
              break;
            }
            const auto& other = t.edge(paths[p][static_cast<std::size_t>((q + 1) / 2)] - 1);
            if (other.color != Color::C3 || other.payload < edge.payload) ok = false;
          }
          witnessed = ok;
        }
        if (!witnessed) fail(mono, cut_name(sys, c) + ": edge " + std::to_string(e) + " has no dominating path");
      }
    }
  }
  report.clauses.push_back(mono);
  return report;
}

ValidationReport verify_mc_bounds(const CutSystem& sys, std::size_t n, bool giant) {
  ValidationReport report;
  auto c = clause("mcbound");
  const BigInt nn = n;
  for (std::size_t k = 0; k < sys.cuts.size(); ++k) {
    const auto& cut = sys.cuts[k];
    if (cut.m == 0) continue;
    const BigInt m = cut.m;
    if (cut.origin == CutOrigin::THICK) {
      std::size_t i = cut.thick_index;
      if (i == 1) {
        if (!giant && 3 * m > 2 * nn) fail(c, "m(C_1) = " + to_decimal(m) + " exceeds 2n/3");
        continue;
      }
      unsigned j = 0;
      while ((std::size_t{2} << j) <= i) ++j;
      if (pow(m, j + 1) > nn)
        fail(c, "m(C_" + std::to_string(i) + ") = " + to_decimal(m) + " exceeds n^(1/" + std::to_string(j + 1) + ")");
    } else if (cut.origin == CutOrigin::THIN) {
      if (pow(m, static_cast<unsigned>(sys.r + 1)) > nn)
        fail(c, "thin cut " + std::to_string(k) + ": m = " + to_decimal(m) + " exceeds n^(1/(r+1))");
    }
  }
  report.clauses.push_back(c);
  return report;
}

}  // namespace permtree
