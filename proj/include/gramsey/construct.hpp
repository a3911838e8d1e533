#ifndef GRAMSEY_CONSTRUCT_HPP
#define GRAMSEY_CONSTRUCT_HPP

#include <array>
#include <vector>

#include "gramsey/coloring.hpp"
#include "gramsey/hypergraph.hpp"

namespace gramsey {

/// Collection of 4-element blocks with pairwise intersection <= 1 (an
/// edge-disjoint K4 packing). Perfect when every vertex pair lies in exactly
/// one block.
struct BlockDesign {
    int n = 0;
    std::vector<std::array<Vertex, 4>> blocks;  // each sorted; list sorted lex
    bool perfect = false;
};

enum class DesignMode { Exact, Greedy };

// Vertex counts with a built-in perfect packing.
bool design_supported_exact(int n);

// Exact mode: a built-in perfect design (n in {1, 4, 13, 16, 25, 28});
// greedy mode: the maximal packing found by scanning 4-sets in lexicographic
// order. Built-in data is validated before it is returned.
BlockDesign make_design(int n, DesignMode mode = DesignMode::Exact);

// Validates an externally supplied block list (sorting it canonically) and
// computes the perfect flag. Throws on overlapping blocks.
BlockDesign design_from_blocks(int n, std::vector<std::array<Vertex, 4>> blocks);

MultiHypergraph design_to_hypergraph(const BlockDesign& design);
BlockDesign design_from_hypergraph(const MultiHypergraph& h);

// Per block: one fresh color on the lexicographically first perfect matching
// of the block, fresh unique colors elsewhere. Shared colors occupy ids
// 0..|blocks|-1; unique ids follow. Palette size is binom(n,2) - |blocks|.
EdgeColoring coloring_from_design(const BlockDesign& design);

// The (6,14)-coloring: a perfect packing when n is 1 or 4 mod 12 and
// supported; otherwise a packed K_{n-i+1} plus uniquely colored remainder
// (i = n mod 12); otherwise a greedy packing on all n vertices.
EdgeColoring coloring_614(int n);

// The active-pair coloring driven by a hypergraph with the Definition-style
// structural properties (checked up front): each hyperedge receives exactly
// one repeated color on one of its perfect matchings, everything else is
// fresh. Palette size is binom(n,2) - |E(H)|.
EdgeColoring quad_coloring_from_hypergraph(const MultiHypergraph& h, int ell);

// Raised when the input hypergraph fails its structural precondition.
class StructuralPreconditionError : public std::runtime_error {
public:
    explicit StructuralPreconditionError(ViolationWitness w)
        : std::runtime_error("hypergraph fails structural precondition: " + w.kind),
          witness(std::move(w)) {}

    ViolationWitness witness;
};

}  // namespace gramsey

#endif
