#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "permtree/group.hpp"

namespace permtree {

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Undirected adjacency in compressed-row form.
struct Csr {
  std::vector<std::uint32_t> offsets{0};
  std::vector<std::uint32_t> targets;

  std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(offsets.size() - 1); }

  /// Undirected closure of labelled rows (rows[label][v] = image of v);
  /// loops and duplicate edges are dropped.
  static Csr from_rows(std::uint32_t vertex_count, const std::vector<std::vector<std::uint32_t>>& rows);
};

/// Breadth-first kernels. The `_serial` versions are the reference
/// implementations; the `_parallel` ones use OpenMP and must agree exactly.
namespace bfs {

std::vector<std::uint32_t> distances_serial(const Csr& graph, std::uint32_t source);
std::vector<std::uint32_t> distances_parallel(const Csr& graph, std::uint32_t source);

/// Maximum eccentricity over all sources; kUnreachable if disconnected.
std::uint32_t diameter_serial(const Csr& graph);
std::uint32_t diameter_parallel(const Csr& graph);

/// Eccentricity of the identity in the undirected Cayley graph Cay(G, S),
/// which equals its diameter. Vertices are chain ranks; returns kUnreachable
/// if S does not generate G. Requires |G| < 2^32.
std::uint32_t cayley_diameter_serial(const PermGroup& g, const std::vector<Permutation>& s);
std::uint32_t cayley_diameter_parallel(const PermGroup& g, const std::vector<Permutation>& s);

}  // namespace bfs

}  // namespace permtree
