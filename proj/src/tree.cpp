#include "permtree/tree.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "permtree/group_ops.hpp"
#include "permtree/real.hpp"

namespace permtree {

const char* to_string(Color c) {
  switch (c) {
    case Color::C1: return "C1";
    case Color::C2: return "C2";
    case Color::C3: return "C3";
  }
  return "?";
}

Color color_from_string(const std::string& s) {
  if (s == "C1") return Color::C1;
  if (s == "C2") return Color::C2;
  if (s == "C3") return Color::C3;
  throw std::invalid_argument("unknown edge color '" + s + "'");
}

std::vector<std::size_t> StructureTree::leaves() const {
  std::vector<std::size_t> out;
  for (const auto& v : nodes_)
    if (v.children.empty()) out.push_back(v.id);
  return out;
}

std::optional<std::size_t> StructureTree::in_edge(std::size_t node) const {
  if (node == 0 || node >= nodes_.size()) return std::nullopt;
  return node - 1;
}

std::vector<std::size_t> StructureTree::out_edges(std::size_t node) const {
  std::vector<std::size_t> out;
  for (auto c : nodes_.at(node).children) out.push_back(c - 1);
  return out;
}

std::vector<std::vector<std::size_t>> StructureTree::paths() const {
  std::vector<std::vector<std::size_t>> out;
  if (nodes_.empty()) return out;
  std::vector<std::size_t> current;
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    current.push_back(v);
    if (nodes_[v].children.empty()) out.push_back(current);
    for (auto c : nodes_[v].children) walk(c);
    current.pop_back();
  };
  walk(0);
  return out;
}

std::size_t StructureTree::Builder::add_root(PermGroup g, DomainSubset domain) {
  if (!tree_.nodes_.empty()) throw std::logic_error("root already present");
  tree_.nodes_.push_back(TreeNode{0, std::move(g), std::move(domain), 0, std::nullopt, {}});
  return 0;
}

std::size_t StructureTree::Builder::add_child(std::size_t parent, PermGroup g, DomainSubset domain, Color color,
                                              BigInt payload, std::vector<std::vector<Point>> blocks) {
  if (parent >= tree_.nodes_.size()) throw std::out_of_range("unknown parent node");
  std::size_t id = tree_.nodes_.size();
  // Preorder: the new node must hang off the current rightmost path.
  for (std::size_t v = id - 1; v != parent;) {
    auto p = tree_.nodes_[v].parent;
    if (!p) throw std::logic_error("nodes must be added in preorder");
    v = *p;
  }
  std::size_t depth = tree_.nodes_[parent].depth + 1;
  tree_.nodes_.push_back(TreeNode{id, std::move(g), std::move(domain), depth, parent, {}});
  tree_.nodes_[parent].children.push_back(id);
  tree_.edges_.push_back(TreeEdge{id - 1, parent, id, color, std::move(payload), std::move(blocks)});
  return id;
}

StructureTree StructureTree::Builder::finish() { return std::move(tree_); }

namespace {

BigInt alt_order(std::size_t k) { return k <= 2 ? BigInt(1) : factorial(k) / 2; }

bool is_alt_on(const PermGroup& g, const DomainSubset& domain) { return g.order() == alt_order(domain.size()); }

BlockSystem singletons(const DomainSubset& domain) {
  BlockSystem b{domain, {}};
  for (Point p : domain) b.blocks.push_back({p});
  return b;
}

class Descent {
 public:
  Descent(std::size_t degree, const TreeConfig& cfg) : builder_(degree), cfg_(cfg) {}

  void run(PermGroup g, DomainSubset domain) {
    std::size_t root = builder_.add_root(g, domain);
    descend(root, g, domain);
  }

  StructureTree finish() { return builder_.finish(); }

 private:
  void descend(std::size_t id, const PermGroup& g, const DomainSubset& domain) {
    if (is_alt_on(g, domain)) return;
    const std::size_t n = g.degree();
    auto orbs = orbits(g.generators(), domain);
    if (orbs.size() > 1) {
      for (auto& o : orbs) {
        PermGroup child = restriction(g, o);
        std::size_t c = builder_.add_child(id, child, o, Color::C2, 0);
        descend(c, child, o);
      }
      return;
    }
    BlockSystem blocks = minimal_block_system(g, domain);
    if (blocks.trivial()) blocks = singletons(domain);
    const std::size_t m = blocks.count();
    PermGroup action = block_action(g, blocks);
    Giant giant = is_giant(action, DomainSubset::full(m));

    if (blocks.block_size() == 1) {
      // Primitive: Alt(Omega) is a leaf, Sym(Omega) drops to it, anything else to {e}.
      if (giant == Giant::SYM) {
        PermGroup alt = alt_preimage(g, blocks);
        std::size_t c = builder_.add_child(id, alt, domain, Color::C1, 2);
        descend(c, alt, domain);
      } else {
        PermGroup triv = PermGroup::trivial(n);
        std::size_t c = builder_.add_child(id, triv, domain, Color::C1, g.order());
        descend(c, triv, domain);
      }
      return;
    }

    if (giant != Giant::NEITHER && m >= cfg_.c3_threshold) {
      PermGroup top = g;
      std::size_t at = id;
      if (giant == Giant::SYM) {
        top = alt_preimage(g, blocks);
        at = builder_.add_child(id, top, domain, Color::C1, 2);
      }
      PermGroup kernel = kernel_of_block_action(top, blocks);
      std::size_t c = builder_.add_child(at, kernel, domain, Color::C3, m, blocks.blocks);
      descend(c, kernel, domain);
      return;
    }
    PermGroup kernel = kernel_of_block_action(g, blocks);
    std::size_t c = builder_.add_child(id, kernel, domain, Color::C1, action.order());
    descend(c, kernel, domain);
  }

  StructureTree::Builder builder_;
  const TreeConfig& cfg_;
};

}  // namespace

StructureTree build_structure_tree(const PermGroup& g, const DomainSubset& domain, const TreeConfig& cfg) {
  if (cfg.c3_threshold < 5) throw std::invalid_argument("c3_threshold must be at least 5");
  if (domain.parent_degree() != g.degree()) throw std::invalid_argument("domain degree differs from group degree");
  if (domain.empty()) throw std::invalid_argument("empty domain");
  if (!domain.invariant_under(g.generators())) throw std::invalid_argument("domain is not invariant under the group");
  bool moves_outside = false;
  auto in = domain.mask();
  for (const auto& s : g.generators())
    for (std::size_t p = 0; p < g.degree(); ++p)
      if (!in[p] && s(static_cast<Point>(p)) != p) moves_outside = true;
  PermGroup root = moves_outside ? restriction(g, domain) : g;
  Descent d(g.degree(), cfg);
  d.run(root, domain);
  return d.finish();
}

StructureTree build_structure_tree(const PermGroup& g, const TreeConfig& cfg) {
  return build_structure_tree(g, DomainSubset::full(g.degree()), cfg);
}

StructureTree augment_tree(const StructureTree& t) {
  if (t.augmented()) throw std::logic_error("tree already augmented");
  if (t.empty()) throw std::invalid_argument("empty tree");
  StructureTree::Builder b(t.degree());
  const std::size_t n = t.degree();

  auto split = [&](std::size_t at, const DomainSubset& domain) {
    if (domain.size() < 2) return;
    for (Point p : domain) b.add_child(at, PermGroup::trivial(n), DomainSubset(n, {p}), Color::C2, 0);
  };

  std::function<void(std::size_t, std::size_t)> copy = [&](std::size_t src, std::size_t dst) {
    const TreeNode& v = t.node(src);
    if (v.children.empty()) {
      const std::size_t k = v.domain.size();
      std::size_t at = dst;
      if (k >= 5) {
        at = b.add_child(dst, PermGroup::trivial(n), v.domain, Color::C3, k, singletons(v.domain).blocks);
      } else if (k >= 3) {
        at = b.add_child(dst, PermGroup::trivial(n), v.domain, Color::C1, alt_order(k));
      }
      split(at, v.domain);
      return;
    }
    for (auto c : v.children) {
      const TreeEdge& e = t.edge(c - 1);
      const TreeNode& w = t.node(c);
      std::size_t id = b.add_child(dst, w.group, w.domain, e.color, e.payload, e.blocks);
      copy(c, id);
    }
  };
  const TreeNode& r = t.node(0);
  b.add_root(r.group, r.domain);
  copy(0, 0);
  b.set_augmented(true);
  return b.finish();
}

bool ValidationReport::passed() const {
  return std::all_of(clauses.begin(), clauses.end(), [](const ClauseResult& c) { return c.passed; });
}

const ClauseResult* ValidationReport::find(const std::string& clause) const {
  for (const auto& c : clauses)
    if (c.clause == clause) return &c;
  return nullptr;
}

bool ValidationReport::passed(const std::string& clause) const {
  const ClauseResult* c = find(clause);
  return c && c->passed;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& c : clauses) {
    os << c.clause << ": " << (c.passed ? "pass" : "FAIL") << '\n';
    for (const auto& v : c.violations) os << "  " << v << '\n';
  }
  return os.str();
}

std::vector<PathStats> path_stats(const StructureTree& t) {
  std::vector<PathStats> out;
  for (auto& path : t.paths()) {
    PathStats s;
    for (std::size_t i = 1; i < path.size(); ++i) {
      const TreeEdge& e = t.edge(path[i] - 1);
      if (e.color == Color::C1) ++s.c1_edges;
      if (e.color == Color::C3) s.c3_product *= e.payload;
    }
    const TreeNode& leaf = t.node(path.back());
    if (!t.augmented() && leaf.domain.size() >= 5) s.c3_product *= leaf.domain.size();
    s.nodes = std::move(path);
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

struct Checker {
  const StructureTree& t;
  ClauseResult result;

  explicit Checker(const StructureTree& tree, std::string name) : t(tree) { result.clause = std::move(name); }
  void fail(std::string why) {
    result.passed = false;
    if (result.violations.size() < 50) result.violations.push_back(std::move(why));
  }
};

std::string edge_name(const TreeEdge& e) {
  return "edge " + std::to_string(e.id) + " (" + std::to_string(e.parent) + "->" + std::to_string(e.child) + ")";
}

void check_c3_edge(Checker& ck, const TreeEdge& e, const TreeNode& p, const TreeNode& c) {
  const std::string where = edge_name(e);
  if (e.payload < 5) ck.fail(where + ": C3 degree below 5");
  if (e.blocks.size() != e.payload) {
    ck.fail(where + ": block count differs from payload");
    return;
  }
  BlockSystem bs{p.domain, e.blocks};
  std::vector<Point> all;
  for (const auto& b : e.blocks) {
    if (b.size() != e.blocks.front().size()) ck.fail(where + ": unequal block sizes");
    all.insert(all.end(), b.begin(), b.end());
  }
  std::sort(all.begin(), all.end());
  if (all != p.domain.points()) {
    ck.fail(where + ": blocks do not partition the domain");
    return;
  }
  if (!is_block_system(p.group.generators(), bs)) {
    ck.fail(where + ": blocks not invariant under the parent");
    return;
  }
  const auto m = static_cast<std::size_t>(e.payload);
  PermGroup action = block_action(p.group, bs);
  bool all_even = std::all_of(action.generators().begin(), action.generators().end(),
                              [](const Permutation& x) { return x.is_even(); });
  if (action.order() != alt_order(m) || !all_even) ck.fail(where + ": parent does not act as Alt(m) on the blocks");
  for (const auto& x : c.group.generators())
    if (!block_image(x, bs).is_identity()) ck.fail(where + ": child moves a block");
  for (const auto& x : p.group.generators()) {
    Permutation xi = x.inverse();
    for (const auto& y : c.group.generators())
      if (!c.group.contains(compose(x, compose(y, xi)))) {
        ck.fail(where + ": child is not normal in the parent");
        return;
      }
  }
  if (p.group.order() != c.group.order() * alt_order(m)) ck.fail(where + ": |parent|/|child| != m!/2");
}

}  // namespace

ValidationReport validate_tree(const StructureTree& t, const TreeConfig& cfg) {
  ValidationReport report;
  Checker st(t, "structure");
  if (t.empty()) {
    st.fail("tree has no nodes");
    report.clauses.push_back(st.result);
    return report;
  }
  const TreeNode& root = t.node(0);
  const std::size_t n = root.domain.size();

  for (const auto& v : t.nodes()) {
    if (!v.domain.invariant_under(v.group.generators())) st.fail("node " + std::to_string(v.id) + ": domain not invariant");
    if (v.parent && v.depth != t.node(*v.parent).depth + 1) st.fail("node " + std::to_string(v.id) + ": bad depth");
    if (v.children.empty()) {
      bool ok = t.augmented() ? (v.domain.size() == 1 && v.group.is_trivial()) : is_alt_on(v.group, v.domain);
      if (!ok) st.fail("leaf " + std::to_string(v.id) + ": not of the required form");
      continue;
    }
    Color col = t.edge(v.children.front() - 1).color;
    for (auto c : v.children)
      if (t.edge(c - 1).color != col) st.fail("node " + std::to_string(v.id) + ": mixed edge colors");
    if (col != Color::C2 && v.children.size() != 1)
      st.fail("node " + std::to_string(v.id) + ": C1/C3 node with several children");
    if (col == Color::C2) {
      if (v.children.size() < 2) st.fail("node " + std::to_string(v.id) + ": C2 split is not a proper partition");
      std::vector<Point> all;
      for (auto c : v.children) {
        const TreeNode& w = t.node(c);
        all.insert(all.end(), w.domain.begin(), w.domain.end());
        try {
          if (!w.group.same_group(restriction(v.group, w.domain)))
            st.fail(edge_name(t.edge(c - 1)) + ": child is not the restriction");
        } catch (const std::invalid_argument&) {
          st.fail(edge_name(t.edge(c - 1)) + ": child domain not invariant under the parent");
        }
      }
      std::sort(all.begin(), all.end());
      if (all != v.domain.points()) st.fail("node " + std::to_string(v.id) + ": C2 children do not partition the domain");
    }
  }
  for (const auto& e : t.edges()) {
    const TreeNode& p = t.node(e.parent);
    const TreeNode& c = t.node(e.child);
    if (e.color == Color::C2) {
      if (e.payload != 0) st.fail(edge_name(e) + ": C2 payload must be 0");
      continue;
    }
    if (!(c.domain == p.domain)) st.fail(edge_name(e) + ": domain changes along a C1/C3 edge");
    if (!c.group.is_subgroup_of(p.group)) {
      st.fail(edge_name(e) + ": child is not a subgroup");
      continue;
    }
    if (e.color == Color::C1) {
      if (p.group.order() != c.group.order() * e.payload) st.fail(edge_name(e) + ": payload differs from the index");
    } else {
      check_c3_edge(st, e, p, c);
    }
  }
  {
    std::vector<Point> all;
    for (auto l : t.leaves()) all.insert(all.end(), t.node(l).domain.begin(), t.node(l).domain.end());
    std::sort(all.begin(), all.end());
    if (all != root.domain.points()) st.fail("leaf domains do not partition the root domain");
  }
  report.clauses.push_back(st.result);

  Checker d(t, "d");
  for (const auto& e : t.edges()) {
    if (e.color != Color::C3) continue;
    const TreeNode& c = t.node(e.child);
    if (c.children.empty() || t.edge(c.children.front() - 1).color != Color::C2) {
      d.fail(edge_name(e) + ": C3 edge not followed by a C2 split");
      continue;
    }
    for (auto w : c.children)
      if (c.domain.size() < static_cast<std::size_t>(e.payload) * t.node(w).domain.size())
        d.fail(edge_name(e) + ": orbit of node " + std::to_string(w) + " too large");
  }
  report.clauses.push_back(d.result);

  const Real ln_n = log(Real(n));
  Checker ei(t, "e-index");
  const Real index_cap = Real(cfg.c1_exp_const) * pow(ln_n, 6);
  for (const auto& e : t.edges())
    if (e.color == Color::C1 && log_of(e.payload) > index_cap)
      ei.fail(edge_name(e) + ": index " + to_decimal(e.payload) + " exceeds n^(c log^5 n)");
  report.clauses.push_back(ei.result);

  auto stats = path_stats(t);
  Checker ec(t, "e-count");
  const Real count_cap = Real(cfg.c1_count_const) * ln_n * ln_n;
  for (const auto& s : stats)
    if (Real(s.c1_edges) > count_cap)
      ec.fail("path to leaf " + std::to_string(s.nodes.back()) + ": " + std::to_string(s.c1_edges) +
              " C1 edges exceed c log^2 n");
  report.clauses.push_back(ec.result);

  Checker f(t, "f");
  for (const auto& s : stats)
    if (s.c3_product > n)
      f.fail("path to leaf " + std::to_string(s.nodes.back()) + ": degree product " + to_decimal(s.c3_product) +
             " exceeds n");
  report.clauses.push_back(f.result);

  Checker gi(t, "giant");
  if (is_transitive(root.group, root.domain) && is_giant(root.group, root.domain) == Giant::NEITHER) {
    for (const auto& e : t.edges())
      if (e.color == Color::C3 && 3 * e.payload > 2 * n)
        gi.fail(edge_name(e) + ": degree " + to_decimal(e.payload) + " exceeds 2n/3 in a non-giant");
  }
  report.clauses.push_back(gi.result);
  return report;
}

std::string tree_to_dot(const StructureTree& t) {
  std::ostringstream os;
  os << "digraph structure_tree {\n  node [shape=box];\n";
  for (const auto& v : t.nodes())
    os << "  n" << v.id << " [label=\"" << v.id << ": |G|=" << to_decimal(v.group.order())
       << ", |Omega|=" << v.domain.size() << "\"];\n";
  for (const auto& e : t.edges()) {
    const char* colour = e.color == Color::C1 ? "blue" : e.color == Color::C2 ? "gray40" : "red";
    os << "  n" << e.parent << " -> n" << e.child << " [color=" << colour << ", label=\"" << to_string(e.color);
    if (e.color != Color::C2) os << ' ' << to_decimal(e.payload);
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace permtree
