#include "gramsey/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>

#include "gramsey/subsets.hpp"

namespace gramsey {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// ---------------------------------------------------------------------------
// exact_f: branch and bound over pair assignments.
//
// Pairs are assigned in colex order ((0,1),(0,2),(1,2),(0,3),...) so that the
// decided region is always a complete prefix. Color ids follow canonical
// first-use order: a pair may reuse any id seen so far or open the next one.
// A branch dies when some p-subset can no longer reach q colors even if all
// its undecided pairs get fresh colors, or when the palette can no longer
// beat the incumbent.
// ---------------------------------------------------------------------------

struct FSearcher {
    int n, p, q;
    long long budget;
    long long nodes = 0;
    bool out_of_budget = false;

    int pair_total;
    std::vector<std::pair<Vertex, Vertex>> pair_of;  // colex index -> (u,v)
    std::vector<std::vector<int>> subset_pairs;      // subset id -> colex pair ids
    std::vector<std::vector<int>> subsets_at_pair;   // colex pair id -> subset ids

    std::vector<int> assignment;  // colex pair id -> color id (-1 undecided)
    int best = 0;
    std::vector<int> best_assignment;

    FSearcher(int n, int p, int q, long long budget) : n(n), p(p), q(q), budget(budget) {
        pair_total = static_cast<int>(binom2(n));
        pair_of.resize(pair_total);
        for (Vertex v = 1; v < n; ++v)
            for (Vertex u = 0; u < v; ++u) pair_of[colex(u, v)] = {u, v};

        subsets_at_pair.resize(pair_total);
        for_each_combination(n, p, [&](const std::vector<int>& s) {
            std::vector<int> ids;
            for (std::size_t i = 0; i < s.size(); ++i)
                for (std::size_t j = i + 1; j < s.size(); ++j)
                    ids.push_back(colex(s[i], s[j]));
            std::sort(ids.begin(), ids.end());
            int sid = static_cast<int>(subset_pairs.size());
            for (int id : ids) subsets_at_pair[id].push_back(sid);
            subset_pairs.push_back(std::move(ids));
            return true;
        });
        assignment.assign(pair_total, -1);
    }

    static int colex_of(Vertex u, Vertex v) { return v * (v - 1) / 2 + u; }
    int colex(Vertex u, Vertex v) const {
        return u < v ? colex_of(u, v) : colex_of(v, u);
    }

    // After tentatively giving pair t its color, can every p-subset through t
    // still reach q colors?
    bool feasible_after(int t) const {
        for (int sid : subsets_at_pair[t]) {
            std::uint64_t colors = 0;
            int undecided = 0;
            for (int id : subset_pairs[sid]) {
                int c = assignment[id];
                if (c < 0)
                    ++undecided;
                else
                    colors |= std::uint64_t{1} << c;
            }
            if (std::popcount(colors) + undecided < q) return false;
        }
        return true;
    }

    void dfs(int t, int used) {
        if (out_of_budget) return;
        if (used >= best) return;  // cannot improve
        if (t == pair_total) {
            best = used;
            best_assignment = assignment;
            return;
        }
        const int limit = std::min(used, best - 2);  // c == used opens a new color
        for (int c = 0; c <= limit; ++c) {
            if (++nodes > budget) {
                out_of_budget = true;
                return;
            }
            assignment[t] = c;
            if (feasible_after(t)) dfs(t + 1, std::max(used, c + 1));
            assignment[t] = -1;
            if (out_of_budget) return;
        }
    }
};

HypergraphSearchResult make_hypergraph_result(SearchStatus status, long long value,
                                              std::optional<MultiHypergraph> witness,
                                              long long nodes, Clock::time_point start,
                                              std::string note = {}) {
    HypergraphSearchResult r;
    r.status = status;
    r.value = value;
    r.witness = std::move(witness);
    r.stats.nodes_explored = nodes;
    r.stats.elapsed_seconds = seconds_since(start);
    r.note = std::move(note);
    return r;
}

// ---------------------------------------------------------------------------
// Shared DFS for the hypergraph maximization problems. Candidates are all
// r-subsets in lexicographic order; a family is explored by choosing the next
// included candidate. Constraint callbacks decide whether an inclusion is
// legal and whether the current family may update the incumbent.
// ---------------------------------------------------------------------------

struct Candidate {
    VertexSet vertices;
    std::uint64_t mask;
};

std::vector<Candidate> all_candidates(int n, int r) {
    std::vector<Candidate> out;
    for_each_combination(n, r, [&](const std::vector<int>& s) {
        out.push_back(Candidate{s, vertex_set_mask(s)});
        return true;
    });
    return out;
}

struct FamilySearcher {
    int n, s, r;
    long long k;
    long long budget;
    long long nodes = 0;
    bool out_of_budget = false;
    long long max_mult = 1;  // per-edge multiplicity cap (k-1 for exact_G)

    std::vector<Candidate> candidates;
    std::vector<std::pair<std::size_t, long long>> family;  // (candidate idx, multiplicity)
    long long count = 0;

    long long best = -1;
    std::vector<std::pair<std::size_t, long long>> best_family;

    // optional structural hooks (exact_H4)
    int ell = 0;
    bool defh_mode = false;
    std::vector<long long> degree;
    std::vector<std::vector<int>> suffix_with_vertex;  // [v][idx]: candidates >= idx containing v

    FamilySearcher(int n, int s, long long k, int r, long long budget)
        : n(n), s(s), r(r), k(k), budget(budget), candidates(all_candidates(n, r)) {}

    void prepare_defh(int ell_in) {
        ell = ell_in;
        defh_mode = true;
        degree.assign(n, 0);
        suffix_with_vertex.assign(n, std::vector<int>(candidates.size() + 1, 0));
        for (int v = 0; v < n; ++v)
            for (std::size_t i = candidates.size(); i-- > 0;)
                suffix_with_vertex[v][i] = suffix_with_vertex[v][i + 1] +
                                           ((candidates[i].mask >> v & 1) ? 1 : 0);
    }

    // Does adding candidate `idx` with multiplicity `mult` create a set of at
    // most `ss` vertices carrying at least `kk` edges? Every new configuration
    // must use the new edge, so grow unions from it.
    bool creates_configuration(std::size_t idx, long long mult, int ss, long long kk) const {
        if (static_cast<int>(std::popcount(candidates[idx].mask)) <= ss && mult >= kk)
            return true;
        return config_dfs(0, candidates[idx].mask, mult, ss, kk);
    }

    bool config_dfs(std::size_t from, std::uint64_t union_mask, long long count_so_far, int ss,
                    long long kk) const {
        for (std::size_t i = from; i < family.size(); ++i) {
            std::uint64_t u = union_mask | candidates[family[i].first].mask;
            if (std::popcount(u) > ss) continue;
            long long c = count_so_far + family[i].second;
            if (c >= kk) return true;
            if (config_dfs(i + 1, u, c, ss, kk)) return true;
        }
        return false;
    }

    bool inclusion_legal(std::size_t idx, long long mult) const {
        if (defh_mode) {
            if (creates_configuration(idx, mult, 2 * ell, ell - 1)) return false;
            for (int i = 2; i <= ell - 2; ++i)
                if (creates_configuration(idx, mult, 2 * i + 1, i)) return false;
            return true;
        }
        return !creates_configuration(idx, mult, s, k);
    }

    bool may_update_best() const {
        if (!defh_mode) return true;
        for (int v = 0; v < n; ++v)
            if (degree[v] > 0 && degree[v] < ell - 1) return false;
        return true;
    }

    bool degrees_repairable(std::size_t next) const {
        if (!defh_mode) return true;
        for (int v = 0; v < n; ++v)
            if (degree[v] > 0 && degree[v] < ell - 1 &&
                degree[v] + suffix_with_vertex[v][next] < ell - 1)
                return false;
        return true;
    }

    void consider_best() {
        if (count > best && may_update_best()) {
            best = count;
            best_family = family;
        }
    }

    void dfs(std::size_t next) {
        if (out_of_budget) return;
        consider_best();
        long long optimistic = count +
                               static_cast<long long>(candidates.size() - next) * max_mult;
        if (optimistic <= best) return;
        if (!degrees_repairable(next)) return;
        for (std::size_t i = next; i < candidates.size(); ++i) {
            for (long long mult = 1; mult <= max_mult; ++mult) {
                if (++nodes > budget) {
                    out_of_budget = true;
                    return;
                }
                if (!inclusion_legal(i, mult)) break;  // higher multiplicity only worse
                family.emplace_back(i, mult);
                count += mult;
                if (defh_mode)
                    for (Vertex v : candidates[i].vertices) degree[v] += 1;
                dfs(i + 1);
                if (defh_mode)
                    for (Vertex v : candidates[i].vertices) degree[v] -= 1;
                count -= mult;
                family.pop_back();
                if (out_of_budget) return;
            }
        }
    }

    MultiHypergraph family_to_hypergraph(
        const std::vector<std::pair<std::size_t, long long>>& fam) const {
        MultiHypergraph h(n, r == 3 ? Uniformity::Three : Uniformity::Four);
        for (const auto& [idx, mult] : fam) h.add_edge(candidates[idx].vertices, mult);
        return h;
    }
};

void validate_sk_params(int n, int s, long long k, int r) {
    if (n < 1 || n > 16) throw std::invalid_argument("search: n must be in 1..16");
    if (r != 3 && r != 4) throw std::invalid_argument("search: r must be 3 or 4");
    if (k < 1) throw std::invalid_argument("search: k must be >= 1");
    if (s < r) throw std::invalid_argument("search: s must be >= r");
}

}  // namespace

ColoringSearchResult exact_f(int n, int p, int q, long long node_budget) {
    if (n < 3 || binom2(n) > 64)
        throw std::invalid_argument("exact_f: n must be in 3..11 (binom(n,2) <= 64)");
    if (p < 3 || p > n) throw std::invalid_argument("exact_f: p must satisfy 3 <= p <= n");
    if (q < 2 || q > binom2(p))
        throw std::invalid_argument("exact_f: q must satisfy 2 <= q <= binom(p,2)");

    auto start = Clock::now();
    FSearcher searcher(n, p, q, node_budget);

    // Rainbow is always a valid incumbent, so the search only explores
    // strictly better palettes.
    searcher.best = searcher.pair_total;
    searcher.best_assignment.resize(searcher.pair_total);
    for (int i = 0; i < searcher.pair_total; ++i) searcher.best_assignment[i] = i;

    searcher.dfs(0, 0);

    EdgeColoring witness(n);
    for (int t = 0; t < searcher.pair_total; ++t) {
        auto [u, v] = searcher.pair_of[t];
        witness.set_color(u, v, searcher.best_assignment[t]);
    }
    ColoringSearchResult r;
    r.status = searcher.out_of_budget ? SearchStatus::Inconclusive : SearchStatus::Exact;
    r.value = searcher.best;
    r.witness = std::move(witness);
    r.stats.nodes_explored = searcher.nodes;
    r.stats.elapsed_seconds = seconds_since(start);
    if (searcher.out_of_budget)
        r.note = "node budget exhausted; value is the best upper bound found";
    return r;
}

HypergraphSearchResult exact_F(int n, int s, long long k, int r, long long node_budget) {
    validate_sk_params(n, s, k, r);
    auto start = Clock::now();
    FamilySearcher searcher(n, s, k, r, node_budget);
    searcher.dfs(0);
    return make_hypergraph_result(
        searcher.out_of_budget ? SearchStatus::Inconclusive : SearchStatus::Exact,
        searcher.best, searcher.family_to_hypergraph(searcher.best_family), searcher.nodes,
        start,
        searcher.out_of_budget ? "node budget exhausted; value is the best lower bound found"
                               : "");
}

HypergraphSearchResult exact_G(int n, int s, long long k, int r, long long node_budget) {
    validate_sk_params(n, s, k, r);
    auto start = Clock::now();
    FamilySearcher searcher(n, s, k, r, node_budget);
    searcher.max_mult = std::max<long long>(1, k - 1);
    searcher.dfs(0);
    return make_hypergraph_result(
        searcher.out_of_budget ? SearchStatus::Inconclusive : SearchStatus::Exact,
        searcher.best, searcher.family_to_hypergraph(searcher.best_family), searcher.nodes,
        start,
        std::string("multiplicity capped at k-1: an edge of multiplicity k is itself an "
                    "(s,k)-configuration") +
            (searcher.out_of_budget
                 ? "; node budget exhausted; value is the best lower bound found"
                 : ""));
}

HypergraphSearchResult exact_H4(int n, int ell, long long node_budget) {
    if (n < 1 || n > 16) throw std::invalid_argument("exact_H4: n must be in 1..16");
    if (ell < 3) throw std::invalid_argument("exact_H4: ell must be >= 3");
    auto start = Clock::now();
    FamilySearcher searcher(n, 2 * ell, ell - 1, 4, node_budget);
    searcher.prepare_defh(ell);
    searcher.dfs(0);
    return make_hypergraph_result(
        searcher.out_of_budget ? SearchStatus::Inconclusive : SearchStatus::Exact,
        searcher.best, searcher.family_to_hypergraph(searcher.best_family), searcher.nodes,
        start,
        searcher.out_of_budget ? "node budget exhausted; value is the best lower bound found"
                               : "");
}

int chromatic_index_oracle(int n) {
    if (n < 2) throw std::invalid_argument("chromatic_index_oracle: n must be >= 2");
    return n % 2 == 0 ? n - 1 : n;
}

}  // namespace gramsey
