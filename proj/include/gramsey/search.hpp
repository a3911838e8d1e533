#ifndef GRAMSEY_SEARCH_HPP
#define GRAMSEY_SEARCH_HPP

#include <optional>
#include <string>

#include "gramsey/coloring.hpp"
#include "gramsey/hypergraph.hpp"

namespace gramsey {

struct SearchStats {
    long long nodes_explored = 0;
    double elapsed_seconds = 0.0;
};

enum class SearchStatus { Exact, Inconclusive };

// Result of an exact extremal search. On Exact the value is optimal and the
// witness attains it. On Inconclusive (node budget exhausted) the value is
// the best bound found so far: an upper bound for the minimization problems,
// a lower bound for the maximization problems.
struct ColoringSearchResult {
    SearchStatus status = SearchStatus::Inconclusive;
    long long value = 0;
    std::optional<EdgeColoring> witness;
    SearchStats stats;
    std::string note;
};

struct HypergraphSearchResult {
    SearchStatus status = SearchStatus::Inconclusive;
    long long value = 0;
    std::optional<MultiHypergraph> witness;
    SearchStats stats;
    std::string note;
};

inline constexpr long long kDefaultColoringBudget = 200'000'000;
inline constexpr long long kDefaultHypergraphBudget = 50'000'000;

// Minimum palette size of a (p,q)-coloring of K_n, by branch and bound over
// pair assignments in a fixed order with canonical first-use color ids as the
// only symmetry breaking. Requires 3 <= p <= n and binom(n,2) <= 64.
ColoringSearchResult exact_f(int n, int p, int q,
                             long long node_budget = kDefaultColoringBudget);

// Maximum edges of an (s,k)-free r-uniform simple hypergraph (r = 3 or 4).
HypergraphSearchResult exact_F(int n, int s, long long k, int r,
                               long long node_budget = kDefaultHypergraphBudget);

// Multi-hypergraph relaxation, counted with multiplicity. Multiplicities are
// capped at k-1 since an edge of multiplicity k is itself an
// (s,k)-configuration.
HypergraphSearchResult exact_G(int n, int s, long long k, int r,
                               long long node_budget = kDefaultHypergraphBudget);

// Maximum edges of a simple 4-uniform hypergraph on n vertices satisfying
// the three structural properties checked by check_defH_properties.
HypergraphSearchResult exact_H4(int n, int ell,
                                long long node_budget = kDefaultHypergraphBudget);

// n-1 for even n, n for odd n: the chromatic index of K_n, which equals
// f(n,3,3) because a (3,3)-coloring is exactly a proper edge coloring (two
// adjacent same-colored edges close into a triangle with at most 2 colors).
int chromatic_index_oracle(int n);

}  // namespace gramsey

#endif
