#ifndef GRAMSEY_TEST_GENERATORS_HPP
#define GRAMSEY_TEST_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "gramsey/coloring.hpp"
#include "gramsey/hypergraph.hpp"

namespace gramsey::testsupport {

using Rng = std::mt19937_64;

// Uniform color per pair from a palette of the given size.
EdgeColoring random_coloring(int n, int palette, Rng& rng);

// Every color used at most twice. When allow_adjacent is false the two uses
// of a color are always vertex-disjoint pairs.
EdgeColoring random_two_use_coloring(int n, Rng& rng, bool allow_adjacent);

// Random hypergraph passing the three structural properties for this ell:
// greedy over shuffled 4-sets with incremental freeness checks, then removal
// of edges at under-degree vertices until the degree condition holds.
MultiHypergraph random_defh_instance(int n, int ell, Rng& rng, double keep_probability = 1.0);

// --- independent oracles (deliberately simple; no search pruning) ---

// Full restricted-growth enumeration of canonical colorings; minimum palette
// such that every p-subset spans at least q colors. Feasible for n <= 5.
int oracle_min_colors(int n, int p, int q);

// All vertex subsets of size <= s, counting induced edges by scanning vertex
// lists. Feasible for n <= 16-ish.
bool oracle_sk_free(const MultiHypergraph& h, int s, long long k);

// Maximum family of 4-subsets of [n] with pairwise unions larger than s
// (equivalent to (s,2)-freeness), by plain DFS over the compatibility graph.
int oracle_max_pairwise_free(int n, int s);

}  // namespace gramsey::testsupport

#endif
