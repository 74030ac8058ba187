#pragma once

#include <vector>

#include "permtree/domain.hpp"
#include "permtree/group.hpp"

namespace permtree {

enum class Giant { SYM, ALT, NEITHER };

const char* to_string(Giant g);

/// Orbits of <gens> on `domain`, sorted by smallest point. Throws if a
/// generator maps a domain point outside the domain.
std::vector<DomainSubset> orbits(const std::vector<Permutation>& gens, const DomainSubset& domain);

bool is_transitive(const PermGroup& g, const DomainSubset& domain);

/// Smallest block containing {domain[0], alpha} for each alpha; returns a
/// nontrivial system with the least block size (ties: lexicographically
/// smallest block through domain[0]) or the singleton system if primitive.
BlockSystem minimal_block_system(const PermGroup& g, const DomainSubset& domain);

/// Minimal block system containing the pair {a, b}, as a point -> class map
/// over the parent degree (points outside the domain map to themselves).
std::vector<Point> pair_block_closure(const std::vector<Permutation>& gens,
                                      const DomainSubset& domain, Point a, Point b);

/// Checks that every generator maps each block onto a block.
bool is_block_system(const std::vector<Permutation>& gens, const BlockSystem& blocks);

/// G_(A): elements fixing every point of A.
PermGroup pointwise_stabilizer(const PermGroup& g, const DomainSubset& a);

/// G_A: elements mapping A onto itself (backtrack search).
PermGroup setwise_stabilizer(const PermGroup& g, const DomainSubset& a);

/// G|_A kept at degree n: each generator acts as before on A and fixes the rest.
/// Throws std::invalid_argument unless A is G-invariant.
PermGroup restriction(const PermGroup& g, const DomainSubset& a);
Permutation restrict_to(const Permutation& p, const DomainSubset& a);

/// Image of `p` in the action on blocks (degree = block count).
Permutation block_image(const Permutation& p, const BlockSystem& blocks);

/// Induced group on the m blocks, as a PermGroup of degree m.
PermGroup block_action(const PermGroup& g, const BlockSystem& blocks);

/// Elements fixing every block setwise.
PermGroup kernel_of_block_action(const PermGroup& g, const BlockSystem& blocks);

/// Preimage of Alt(m) under the block action.
PermGroup alt_preimage(const PermGroup& g, const BlockSystem& blocks);

/// SYM iff |G| = |Omega|!, ALT iff |G| = |Omega|!/2 (|Omega| >= 2).
Giant is_giant(const PermGroup& g, const DomainSubset& domain);

/// First `n` images of a permutation whose degree is >= n and which
/// preserves [0, n).
Permutation truncate(const Permutation& p, std::size_t n);

/// Elements of <gens> by closure; the exhaustive reference used in tests.
std::vector<Permutation> closure_elements(std::size_t degree, const std::vector<Permutation>& gens,
                                          std::size_t limit = 1u << 20);

/// A ∩ B by filtering the elements of A; throws ResourceLimitError beyond `limit`.
PermGroup intersection(const PermGroup& a, const PermGroup& b, std::uint64_t limit = 1u << 20);

}  // namespace permtree
