#pragma once

#include <optional>
#include <string>
#include <vector>

#include "permtree/bigint.hpp"
#include "permtree/domain.hpp"
#include "permtree/group.hpp"

namespace permtree {

enum class Color { C1, C2, C3 };

const char* to_string(Color c);
Color color_from_string(const std::string& s);

struct TreeConfig {
  std::size_t c3_threshold = 5;
  double c1_exp_const = 1.0;
  double c1_count_const = 1.0;
};

struct TreeNode {
  std::size_t id = 0;
  PermGroup group;
  DomainSubset domain;
  std::size_t depth = 0;
  std::optional<std::size_t> parent;
  std::vector<std::size_t> children;  // in id order
};

struct TreeEdge {
  std::size_t id = 0;
  std::size_t parent = 0;
  std::size_t child = 0;
  Color color = Color::C1;
  /// C1: index [G:G']. C3: alternating degree m. C2: 0.
  BigInt payload;
  /// C3 only: the m blocks permuted as Alt(m) by the parent and fixed by the child.
  std::vector<std::vector<Point>> blocks;
};

/// Rooted tree of (group, domain) pairs. Node ids are preorder with the root
/// at 0; the edge into node v has id v - 1.
class StructureTree {
 public:
  StructureTree() = default;

  std::size_t degree() const noexcept { return degree_; }
  std::size_t root() const noexcept { return 0; }
  const std::vector<TreeNode>& nodes() const noexcept { return nodes_; }
  const std::vector<TreeEdge>& edges() const noexcept { return edges_; }
  const TreeNode& node(std::size_t id) const { return nodes_.at(id); }
  const TreeEdge& edge(std::size_t id) const { return edges_.at(id); }
  bool augmented() const noexcept { return augmented_; }
  bool empty() const noexcept { return nodes_.empty(); }

  std::vector<std::size_t> leaves() const;
  /// Edge entering `node`; the root has none.
  std::optional<std::size_t> in_edge(std::size_t node) const;
  /// Edges leaving `node`, in child order.
  std::vector<std::size_t> out_edges(std::size_t node) const;
  /// Every root-to-leaf path as a node sequence, leftmost first.
  std::vector<std::vector<std::size_t>> paths() const;

  /// Assembly helper used by the builder and the JSON reader. Nodes must be
  /// added in preorder; `parent` must already exist.
  class Builder;

 private:
  friend class Builder;
  std::size_t degree_ = 0;
  std::vector<TreeNode> nodes_;
  std::vector<TreeEdge> edges_;
  bool augmented_ = false;
};

class StructureTree::Builder {
 public:
  explicit Builder(std::size_t degree) { tree_.degree_ = degree; }
  std::size_t add_root(PermGroup g, DomainSubset domain);
  std::size_t add_child(std::size_t parent, PermGroup g, DomainSubset domain, Color color, BigInt payload,
                        std::vector<std::vector<Point>> blocks = {});
  void set_augmented(bool value) { tree_.augmented_ = value; }
  StructureTree finish();

 private:
  StructureTree tree_;
};

/// Orbit / minimal-block descent down to (Alt(Omega_i), Omega_i) leaves.
StructureTree build_structure_tree(const PermGroup& g, const DomainSubset& domain, const TreeConfig& cfg = {});
StructureTree build_structure_tree(const PermGroup& g, const TreeConfig& cfg = {});

/// Adds C3 (|Omega_i| >= 5) or C1 edges below each Alt leaf, then C2 edges to
/// singletons. Throws std::logic_error on an already augmented tree.
StructureTree augment_tree(const StructureTree& t);

struct ClauseResult {
  std::string clause;
  bool passed = true;
  std::vector<std::string> violations;
};

struct ValidationReport {
  std::vector<ClauseResult> clauses;

  bool passed() const;
  bool passed(const std::string& clause) const;
  const ClauseResult* find(const std::string& clause) const;
  std::string summary() const;
};

/// Clauses: structure, d, e-index, e-count, f, giant. Never throws on a
/// violation; every failure is a report entry.
ValidationReport validate_tree(const StructureTree& t, const TreeConfig& cfg = {});

/// Per root-to-leaf path: C1 edge count and product of alternating degrees
/// (C3 payloads plus the degree of an unaugmented leaf with |Omega| >= 5).
struct PathStats {
  std::vector<std::size_t> nodes;
  std::size_t c1_edges = 0;
  BigInt c3_product = 1;
};
std::vector<PathStats> path_stats(const StructureTree& t);

std::string tree_to_dot(const StructureTree& t);

}  // namespace permtree
