#pragma once

#include <string>
#include <vector>

#include "permtree/tree.hpp"

namespace permtree {

enum class CutKind { SECTION, C1, C2, C3 };
enum class CutOrigin { THICK, THIN, PLAIN };

const char* to_string(CutKind k);
CutKind cut_kind_from_string(const std::string& s);

struct HorizontalCut {
  std::vector<std::size_t> nodes;  // sorted ids
  std::vector<std::size_t> edges;  // sorted ids
  CutKind kind = CutKind::SECTION;
  CutOrigin origin = CutOrigin::PLAIN;
  std::size_t thick_index = 0;  // i of C_i for thick cuts (1-based), else 0
  std::uint64_t m = 0;          // largest C3 degree among member edges
  /// Thick indices i of the cuts C_i built in the enclosing parts, outermost first.
  std::vector<std::size_t> governing;

  std::string origin_string() const;
};

/// Cuts in descent order (root side first).
struct CutSystem {
  std::vector<HorizontalCut> cuts;
  std::size_t r = 1;

  std::size_t thick_count() const;
  std::size_t thin_count() const;
  std::size_t count(CutKind k) const;
  /// Position of `i`-th thick cut C_i in `cuts`.
  std::size_t thick_position(std::size_t i) const;
};

/// The 2^r - 1 greedy largest-degree C3 cuts, in descent order.
CutSystem build_thick_cuts(const StructureTree& t, std::size_t r);
/// Adds thin C3 cuts to every part between consecutive thick cuts.
void build_thin_cuts(const StructureTree& t, CutSystem& sys);
/// Adds C1 cuts between consecutive C3 cuts.
void build_c1_cuts(const StructureTree& t, CutSystem& sys);
/// Adds C2 cuts between consecutive existing cuts.
void build_c2_cuts(const StructureTree& t, CutSystem& sys);

/// Thick, thin, C1 and C2 cuts, validated. Throws ValidationError naming the
/// failed clause if the result is not a valid cut system.
CutSystem assemble_cuts(const StructureTree& t, std::size_t r);

/// Clauses: coverage, kinds, non-crossing, edge-partition, thick-count,
/// thin-count, monotonicity.
ValidationReport validate_cuts(const StructureTree& t, const CutSystem& sys);

/// m(C_1) <= 2n/3 (skipped when `giant`), m(C_i) <= n^(1/(j+1)) for thick
/// 2^j <= i < 2^(j+1), m(C) <= n^(1/(r+1)) for thin cuts. Exact integer tests.
ValidationReport verify_mc_bounds(const CutSystem& sys, std::size_t n, bool giant);

/// Every path meets each cut once: the member of `cut` on `path`, as a
/// position 2*depth (node) or 2*depth - 1 (edge into a node at that depth).
std::size_t cut_position_on_path(const StructureTree& t, const HorizontalCut& cut,
                                 const std::vector<std::size_t>& path);

}  // namespace permtree
