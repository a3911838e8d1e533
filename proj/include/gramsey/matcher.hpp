#ifndef GRAMSEY_MATCHER_HPP
#define GRAMSEY_MATCHER_HPP

#include <cstdint>
#include <optional>

#include "gramsey/coloring.hpp"

namespace gramsey {

// Parameters of the bipartite assignment model: A = E(K_n), B = one vertex
// per (vertex, color) pair, an edge {uv, u_c, v_c} per pair and color. The
// degree parameter D equals n; the palette surplus exponent controls the
// target palette size n + n^(1-epsilon).
struct ColorGraphSpec {
    int n = 0;
    long long palette_size = 0;
    double epsilon = 0.5;
};

long long target_palette_size(int n, double epsilon);

struct ConfigCheckReport {
    long long a_degree = 0;        // degree of each K_n-edge vertex: |C|
    long long b_degree_max = 0;    // degree of each (vertex,color) vertex: n-1
    long long max_pair_codegree = 0;
};

// Degree and codegree figures of the assignment model, computed from its
// structure (the model has binom(n,2)*|C| edges and is never materialized).
ConfigCheckReport verify_G_conditions(const ColorGraphSpec& spec);

struct MatcherFailure {
    VertexPair stuck_pair;
    int restarts_used = 0;
};

struct MatcherResult {
    std::optional<EdgeColoring> coloring;  // present on success
    std::optional<MatcherFailure> failure;
    int restarts_used = 0;
    std::uint64_t seed = 0;

    bool ok() const { return coloring.has_value(); }
};

// Randomized greedy coloring avoiding forbidden configurations: no color
// repeats at a vertex, and no vertex set S with 4 <= |S| <= p that is spanned
// by its colored edges and has at least |S|-2 repeats. Pair order and palette
// scan order are shuffled deterministically from the seed; a dead end
// triggers a full restart with seed + restart index.
MatcherResult find_avoiding_coloring(int n, int p, int palette_size, std::uint64_t seed,
                                     int max_restarts);

// ok iff no vertex set S with 4 <= |S| <= p is spanned by its colored edges
// with at least |S|-2 repeats. Partial colorings allowed. Returns the
// smallest, lexicographically least violating S (which is therefore minimal).
std::optional<ViolationWitness> audit_configuration(const EdgeColoring& coloring, int p);

// Would assigning color c to pair {u,v} keep the coloring configuration-free?
// Assumes the current coloring is configuration-free and c is unused at both
// endpoints; checks exactly the candidate sets containing u and v.
bool incremental_config_ok(const EdgeColoring& coloring, Vertex u, Vertex v, int c, int p);

}  // namespace gramsey

#endif
