#ifndef GRAMSEY_VERIFY_HPP
#define GRAMSEY_VERIFY_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "gramsey/coloring.hpp"
#include "gramsey/hypergraph.hpp"

namespace gramsey {

// ok iff every p-subset S of vertices spans at least q distinct colors.
// On failure returns the lexicographically least violating S with its c(S).
// Requires 3 <= p <= n, 2 <= q <= binom(p,2) and a total coloring.
std::optional<ViolationWitness> check_pq_coloring(const EdgeColoring& coloring, int p, int q);

enum class SkStrategy {
    Auto,           // pick by instance size
    VertexSubsets,  // enumerate vertex sets of size min(s,n)
    EdgeUnions,     // enumerate edge subsets with bounded union
};

// ok iff no k edges (counted with multiplicity) span at most s vertices.
// The witness subset is the lexicographically least vertex set of size
// min(s,n) inducing >= k edges, with its induced edge count.
std::optional<ViolationWitness> check_sk_free(const MultiHypergraph& h, int s, long long k,
                                              SkStrategy strategy = SkStrategy::Auto);

// Checks the three structural properties of the restricted 4-uniform family:
//   (1) (2*ell, ell-1)-free,
//   (2) (2i+1, i)-free for i = 2..ell-2,
//   (3) every vertex has degree 0 or degree >= ell-1.
// Requires a simple 4-uniform hypergraph and ell >= 3.
std::optional<ViolationWitness> check_defH_properties(const MultiHypergraph& h, int ell);

// All violating p-sets in lexicographic order, up to limit.
std::vector<ViolationWitness> enumerate_violations(const EdgeColoring& coloring, int p, int q,
                                                   std::size_t limit);

}  // namespace gramsey

#endif
