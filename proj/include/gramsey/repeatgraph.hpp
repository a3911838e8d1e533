#ifndef GRAMSEY_REPEATGRAPH_HPP
#define GRAMSEY_REPEATGRAPH_HPP

#include <map>
#include <optional>

#include "gramsey/coloring.hpp"
#include "gramsey/hypergraph.hpp"

namespace gramsey {

enum class PaddingRule {
    Strict,  // keep 3-vertex unions as 3-sets (mixed uniformity)
    Padded,  // enlarge 3-vertex unions with the smallest outside vertex (4-uniform)
};

struct RepeatBuildPolicy {
    PaddingRule padding = PaddingRule::Strict;
    // Representative edge per color; defaults to the lexicographically least
    // edge of each color class. Entries must actually carry their color.
    std::map<int, VertexPair> representatives;
};

// One hyperedge e ∪ e_c per non-representative edge e of each color class.
// Total edge count (with multiplicity) is binom(n,2) - palette_size.
MultiHypergraph build_repeat_quadratic(const EdgeColoring& coloring,
                                       const RepeatBuildPolicy& policy = {});

// Vertex-local 3-uniform variant: for each vertex v and color c on d >= 2
// incident edges, the lexicographically least such edge joined with each of
// the d-1 others. Monochromatic triangles yield multi-edges.
MultiHypergraph build_repeat_linear(const EdgeColoring& coloring);

// Strict mode: ok iff r(S) equals the induced edge count (with multiplicity)
// for every S ⊆ V. Padded mode: ok iff induced count <= r(S) everywhere with
// equality at S = V. Exhaustive over all 2^n subsets; requires n <= 16.
std::optional<ViolationWitness> check_faithfulness(const EdgeColoring& coloring,
                                                   const MultiHypergraph& h, PaddingRule mode);

}  // namespace gramsey

#endif
