#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "permtree/bfs.hpp"
#include "permtree/group.hpp"

namespace permtree {

inline constexpr std::uint64_t kDefaultMaxCosets = 2'000'000;

/// Left cosets L(G, H). Vertex 0 is H itself; the others are numbered in
/// breadth-first order from H under left multiplication by G's generators.
/// Each coset is represented by its lexicographically smallest element.
class CosetSpace {
 public:
  CosetSpace(PermGroup g, PermGroup h, std::uint64_t max_cosets = kDefaultMaxCosets);

  const PermGroup& group() const noexcept { return g_; }
  const PermGroup& subgroup() const noexcept { return h_; }
  std::size_t index() const noexcept { return reps_.size(); }
  const std::vector<Permutation>& transversal() const noexcept { return reps_; }

  /// Smallest element of xH by image sequence.
  Permutation canonical(const Permutation& x) const;
  /// Vertex of xH; x must lie in G.
  std::uint32_t coset_of(const Permutation& x) const;

 private:
  PermGroup g_, h_;
  PermGroup h_ordered_;  // H with base 0, 1, ..., n-1
  std::vector<Permutation> reps_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> ids_;
};

struct SchreierGraph {
  std::shared_ptr<const CosetSpace> space;
  std::vector<Permutation> labels;
  /// rows[label][v] = vertex of labels[label] * v.
  std::vector<std::vector<std::uint32_t>> rows;

  std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(space->index()); }
  Csr undirected() const { return Csr::from_rows(vertex_count(), rows); }
};

SchreierGraph schreier_graph(std::shared_ptr<const CosetSpace> space, std::vector<Permutation> labels);

/// {e} together with S and the inverses of S, first occurrence order.
std::vector<Permutation> with_inverses(const std::vector<Permutation>& s);

/// True iff every element of S lies in G and <S> = G.
bool generates(const PermGroup& g, const std::vector<Permutation>& s);

/// Undirected diameter of Sch(L(G, H), S). Throws std::invalid_argument if
/// S does not generate G or H is not a subgroup of G.
std::uint32_t schreier_diameter(const PermGroup& g, const PermGroup& h, const std::vector<Permutation>& s,
                                std::uint64_t max_cosets = kDefaultMaxCosets);

/// A Schreier generator u = tau(s v)^-1 s tau(v) of H together with the word
/// over S (indices, first applied first) that spells it.
struct SchreierGenerator {
  Permutation element;
  std::vector<std::uint32_t> word;
};

struct SchreierGenerators {
  std::vector<SchreierGenerator> generators;
  std::uint32_t diameter = 0;  // d = schreier_diameter(G, H, S)
};

/// Requires S symmetric with the identity, generating G.
SchreierGenerators schreier_generators(const PermGroup& g, const PermGroup& h,
                                       const std::vector<Permutation>& s,
                                       std::uint64_t max_cosets = kDefaultMaxCosets);

/// Exhaustive diam(G, H): max of schreier_diameter over all inverse-closed
/// generating subsets containing the identity. Requires |G| <= threshold.
struct PairDiameter {
  std::uint32_t diameter = 0;
  std::vector<Permutation> witness;  // a worst generating set
  std::uint64_t sets_examined = 0;
};
inline constexpr std::uint64_t kExhaustiveThreshold = 24;
PairDiameter diam_pair_exact(const PermGroup& g, const PermGroup& h,
                             std::uint64_t threshold = kExhaustiveThreshold);
/// Same enumeration shared by several subgroups of one group.
std::vector<PairDiameter> diam_pair_exact_many(const PermGroup& g, const std::vector<PermGroup>& hs,
                                               std::uint64_t threshold = kExhaustiveThreshold);

/// Extends S' (generating G' <= G) by elements of G, each outside the group
/// generated so far, until the whole of G is generated.
std::vector<Permutation> extend_generating_set(const PermGroup& g, const PermGroup& g_sub,
                                               const std::vector<Permutation>& s_sub);

/// Compares the S'-edges of Sch(L(G, H), S) on {g'H : g' in G'} with
/// Sch(L(G', H'), S') through phi(g'H) = g'H'.
struct InducedSubgraphReport {
  bool bijection = false;        // phi is well defined, injective and onto
  bool edges_match = false;      // S'-edges correspond exactly
  std::size_t vertices = 0;
  std::size_t extra_edges = 0;   // edges from S \ S' joining two distinct vertices of the subset
  bool holds() const { return bijection && edges_match; }
};
InducedSubgraphReport check_induced_subgraph(const PermGroup& g, const PermGroup& h, const PermGroup& g_sub,
                                             const std::vector<Permutation>& s_sub,
                                             const std::vector<Permutation>& s);

/// DOT with vertices labelled by representatives.
std::string to_dot(const SchreierGraph& graph);
/// Little-endian u32: vertex count, label count, then for each vertex the
/// target of each label.
std::string to_binary(const SchreierGraph& graph);
/// Parses to_binary output back into rows[label][v].
std::vector<std::vector<std::uint32_t>> rows_from_binary(const std::string& bytes);

}  // namespace permtree
