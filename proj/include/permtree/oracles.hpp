#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "permtree/bounds.hpp"
#include "permtree/coset.hpp"
#include "permtree/group.hpp"

namespace permtree {

enum class DiameterMode { EXACT_SET, EXACT_GROUP, SAMPLED_LOWER };
const char* to_string(DiameterMode m);

struct DiameterRecord {
  std::string group;
  std::size_t degree = 0;
  std::vector<Permutation> generators;  // the set measured, or the worst one found
  std::uint32_t diameter = 0;
  DiameterMode mode = DiameterMode::EXACT_SET;
  std::uint64_t sets_examined = 0;
};

/// Undirected Cayley diameter; throws std::invalid_argument if S does not
/// generate G and ResourceLimitError above `max_order`.
std::uint32_t cayley_diameter(const PermGroup& g, const std::vector<Permutation>& s,
                              std::uint64_t max_order = 50'000'000);

/// max over inverse-closed generating sets containing e. The trivial group
/// gets diameter 1 by convention.
DiameterRecord group_diameter_exact(const PermGroup& g, const std::string& name = "",
                                    std::uint64_t threshold = kExhaustiveThreshold);

/// Random generating set: random elements until they generate G.
std::vector<Permutation> random_generating_set(const PermGroup& g, std::mt19937_64& rng, std::size_t start = 2);

/// Largest Cayley diameter over `samples` random generating sets; a lower
/// bound for diam(G).
DiameterRecord sampled_diameter(const PermGroup& g, std::mt19937_64& rng, std::size_t samples,
                                const std::string& name = "");

/// diam(Alt(m)) for 3 <= m <= limit: exact when |Alt(m)| is within the
/// threshold, sampled otherwise.
std::vector<DiameterRecord> alt_diam_records(std::size_t limit, std::uint64_t seed, std::size_t samples = 20,
                                             std::uint64_t threshold = kExhaustiveThreshold);
AltDiamTable alt_diam_table(std::size_t limit, std::uint64_t seed, std::size_t samples = 20,
                            std::uint64_t threshold = kExhaustiveThreshold);

/// Minimum index of a proper subgroup of Alt(n), 5 <= n <= 7, from the full
/// list of subgroup classes.
std::uint64_t min_proper_subgroup_index(std::size_t n);

enum class ForcingStatus { FORCED, PRECONDITION_FAIL };
const char* to_string(ForcingStatus s);

struct ForcingResult {
  ForcingStatus status = ForcingStatus::PRECONDITION_FAIL;
  std::vector<std::string> failed;  // one message per failed precondition
};

/// Checks the hypotheses (G transitive, n >= 5, 2n/3 <= |A| < n, H <= G_A,
/// H|_A >= Alt(A)) and, when they hold, that G is a giant. A non-giant G
/// satisfying every hypothesis throws std::logic_error.
ForcingResult giant_forcing_check(const PermGroup& g, const DomainSubset& a, const PermGroup& h);

/// 3-cycles (p q x) for a fixed pair p, q in A and every other point x,
/// generating Alt(n). Each one outside A is obtained by conjugating a 3-cycle
/// of A by a transitivity witness and then moving its A-points into place
/// with 3-cycles of A. Requires G transitive, 2n/3 <= |A| < n and every
/// 3-cycle of A in G.
struct Propagation {
  std::vector<Permutation> three_cycles;
  /// For each point x outside A: the word (generator indices) of the witness g with g(x) in A.
  std::vector<std::pair<Point, std::vector<std::uint32_t>>> witnesses;
};
Propagation propagate_three_cycles(const PermGroup& g, const DomainSubset& a);

/// One instance of the product conjecture. Factor i acts on its own block of
/// points; H <= prod G_i, H' = H cap prod G'_i.
struct ConjectureFactor {
  PermGroup g, g_sub;
};

struct ConjectureInstance {
  std::string name;
  std::vector<ConjectureFactor> factors;
  PermGroup h, h_sub;
  std::uint64_t max_index = 0;
  DiameterRecord diam_h, diam_h_sub;
  double ratio = 0;  // diam(H) / (max_index * diam(H'))
};

/// Fills H' (if absent), the index and the exact diameters.
ConjectureInstance make_instance(std::string name, std::vector<ConjectureFactor> factors,
                                 std::optional<PermGroup> h = std::nullopt,
                                 std::uint64_t threshold = kExhaustiveThreshold);

/// diam(H) <= 4 [G_1 : G'_1] diam(H'); requires a single factor.
bool conjecture_k1_check(const ConjectureInstance& inst);

struct ConjectureReport {
  std::vector<ConjectureInstance> instances;
  /// c -> max over instances of diam(H) / (k^c * max_index * diam(H')).
  std::vector<std::pair<int, double>> empirical_constants;
};
ConjectureReport conjecture_harness(std::vector<ConjectureInstance> instances, std::vector<int> exponents = {0, 1, 2});

/// Instances with one factor drawn from the small groups: H runs over the
/// subgroups of G_1 (up to conjugacy) and G'_1 over all subgroups.
std::vector<ConjectureInstance> k1_fixtures(std::size_t min_count = 100);

/// Products of two small groups, report only.
std::vector<ConjectureInstance> k2_fixtures();

std::string to_json_line(const DiameterRecord& r);
std::string to_json_line(const ConjectureInstance& c);
std::string ratio_csv(const ConjectureReport& r);

}  // namespace permtree
