#pragma once

#include <string>
#include <vector>

#include "permtree/group.hpp"

namespace permtree {

/// Generators for standard permutation groups. Point labels are 0-based.
namespace make {

std::vector<Permutation> symmetric(std::size_t n);
std::vector<Permutation> alternating(std::size_t n);
std::vector<Permutation> cyclic(std::size_t n);
std::vector<Permutation> dihedral(std::size_t n);
/// x -> x + 1 and x -> a x over Z/p (a a primitive root).
std::vector<Permutation> affine_line(std::size_t p);
/// PSL(2, p) on the projective line, infinity labelled p.
std::vector<Permutation> psl2(std::size_t p);
std::vector<Permutation> pgl2(std::size_t p);
/// Imprimitive wreath product: `inner` (degree k) on each of the m blocks
/// {b k, ..., b k + k - 1}, blocks permuted by `outer` (degree m).
std::vector<Permutation> wreath(const std::vector<Permutation>& inner, std::size_t k,
                                const std::vector<Permutation>& outer, std::size_t m);
/// Product action of G x H on pairs (i, j) -> i * l + j.
std::vector<Permutation> product_action(const std::vector<Permutation>& g, std::size_t k,
                                        const std::vector<Permutation>& h, std::size_t l);
/// Intransitive direct product: G on [0, k), H on [k, k + l).
std::vector<Permutation> direct_sum(const std::vector<Permutation>& g, std::size_t k,
                                    const std::vector<Permutation>& h, std::size_t l);
/// Induced action of <gens> (degree n) on the 2-subsets of [0, n).
std::vector<Permutation> on_pairs(const std::vector<Permutation>& gens, std::size_t n);

}  // namespace make

struct NamedGroup {
  std::string name;
  PermGroup group;
};

/// Transitive groups of degree 5..40 used by the tree, cut and bound checks.
std::vector<NamedGroup> transitive_corpus();

/// Small groups (order <= 24) with their natural degree, for exhaustive
/// diameter checks.
std::vector<NamedGroup> small_groups();

std::size_t primitive_root(std::size_t p);

}  // namespace permtree
