#include "gramsey/verify.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "gramsey/subsets.hpp"

namespace gramsey {
namespace {

void require_total(const EdgeColoring& coloring) {
    if (auto p = coloring.first_uncolored_pair()) throw PartialColoringError(p->u, p->v);
}

void validate_pq_params(const EdgeColoring& coloring, int p, int q) {
    if (p < 3 || p > coloring.n())
        throw std::invalid_argument("p must satisfy 3 <= p <= n");
    if (q < 2 || q > binom2(p))
        throw std::invalid_argument("q must satisfy 2 <= q <= binom(p,2)");
}

// Pads a vertex set to the target size with the smallest absent vertices.
VertexSet pad_vertex_set(const VertexSet& vs, int target, int n) {
    VertexSet out = vs;
    for (Vertex v = 0; v < n && static_cast<int>(out.size()) < target; ++v) {
        if (!std::binary_search(vs.begin(), vs.end(), v)) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<ViolationWitness> sk_by_vertex_subsets(const MultiHypergraph& h, int s,
                                                     long long k) {
    const int m = std::min(s, h.n());
    std::optional<ViolationWitness> found;
    for_each_combination(h.n(), m, [&](const std::vector<int>& subset) {
        std::uint64_t mask = 0;
        for (int v : subset) mask |= std::uint64_t{1} << v;
        long long induced = h.induced_edge_count(mask);
        if (induced >= k) {
            found = ViolationWitness{"sk-configuration", subset, std::nullopt, std::nullopt,
                                     induced};
            return false;
        }
        return true;
    });
    return found;
}

std::optional<ViolationWitness> sk_by_edge_unions(const MultiHypergraph& h, int s, long long k) {
    const int m = std::min(s, h.n());
    const auto& edges = h.edges();
    const auto& masks = h.edge_masks();
    std::optional<VertexSet> best;

    // DFS over edge subsets whose union stays within s vertices; any subset
    // reaching total multiplicity >= k yields a candidate witness set.
    std::vector<std::size_t> stack;
    auto consider = [&](std::uint64_t union_mask) {
        VertexSet vs;
        for (int v = 0; v < h.n(); ++v)
            if (union_mask >> v & 1) vs.push_back(v);
        VertexSet padded = pad_vertex_set(vs, m, h.n());
        if (!best || padded < *best) best = std::move(padded);
    };
    auto dfs = [&](auto&& self, std::size_t next, std::uint64_t union_mask,
                   long long count) -> void {
        if (count >= k) {
            consider(union_mask);
            return;  // supersets only grow the union
        }
        for (std::size_t i = next; i < edges.size(); ++i) {
            std::uint64_t u = union_mask | masks[i];
            if (std::popcount(u) > s) continue;
            self(self, i + 1, u, count + edges[i].multiplicity);
        }
    };
    dfs(dfs, 0, 0, 0);

    if (!best) return std::nullopt;
    std::uint64_t mask = 0;
    for (int v : *best) mask |= std::uint64_t{1} << v;
    return ViolationWitness{"sk-configuration", *best, std::nullopt, std::nullopt,
                            h.induced_edge_count(mask)};
}

}  // namespace

std::optional<ViolationWitness> check_pq_coloring(const EdgeColoring& coloring, int p, int q) {
    validate_pq_params(coloring, p, q);
    require_total(coloring);
    std::optional<ViolationWitness> found;
    for_each_combination(coloring.n(), p, [&](const std::vector<int>& subset) {
        int c = count_colors(coloring, subset);
        if (c < q) {
            found = ViolationWitness{"pq-violation", subset, c,
                                     binom2(p) - c, std::nullopt};
            return false;
        }
        return true;
    });
    return found;
}

std::optional<ViolationWitness> check_sk_free(const MultiHypergraph& h, int s, long long k,
                                              SkStrategy strategy) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    int min_edge_size = 3;
    if (h.uniformity() == Uniformity::Four) min_edge_size = 4;
    if (s < min_edge_size)
        throw std::invalid_argument("s must be at least the edge size r");

    if (strategy == SkStrategy::Auto) {
        // Vertex enumeration is exact but costs binom(n, s); edge unions win
        // whenever the edge list is short, which is the common case here.
        strategy = binomial(h.n(), std::min(s, h.n())) <= 20000
                       ? SkStrategy::VertexSubsets
                       : SkStrategy::EdgeUnions;
    }
    return strategy == SkStrategy::VertexSubsets ? sk_by_vertex_subsets(h, s, k)
                                                 : sk_by_edge_unions(h, s, k);
}

std::optional<ViolationWitness> check_defH_properties(const MultiHypergraph& h, int ell) {
    if (ell < 3) throw std::invalid_argument("ell must be >= 3");
    if (h.uniformity() != Uniformity::Four)
        throw std::invalid_argument("4-uniform hypergraph required");
    if (!h.is_simple()) throw std::invalid_argument("simple hypergraph required");

    if (auto w = check_sk_free(h, 2 * ell, ell - 1)) {
        w->kind = "defH-property-1";
        return w;
    }
    for (int i = 2; i <= ell - 2; ++i) {
        if (auto w = check_sk_free(h, 2 * i + 1, i)) {
            w->kind = "defH-property-2(i=" + std::to_string(i) + ")";
            return w;
        }
    }
    std::vector<long long> deg = h.degrees();
    for (Vertex v = 0; v < h.n(); ++v) {
        if (deg[v] > 0 && deg[v] < ell - 1) {
            return ViolationWitness{"defH-property-3-degree", {v}, std::nullopt, std::nullopt,
                                    deg[v]};
        }
    }
    return std::nullopt;
}

std::vector<ViolationWitness> enumerate_violations(const EdgeColoring& coloring, int p, int q,
                                                   std::size_t limit) {
    validate_pq_params(coloring, p, q);
    require_total(coloring);
    std::vector<ViolationWitness> out;
    if (limit == 0) return out;
    for_each_combination(coloring.n(), p, [&](const std::vector<int>& subset) {
        int c = count_colors(coloring, subset);
        if (c < q) {
            out.push_back(ViolationWitness{"pq-violation", subset, c, binom2(p) - c,
                                           std::nullopt});
            if (out.size() >= limit) return false;
        }
        return true;
    });
    return out;
}

}  // namespace gramsey
