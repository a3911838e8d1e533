#include "gramsey/repeatgraph.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace gramsey {
namespace {

void require_total(const EdgeColoring& coloring) {
    if (auto p = coloring.first_uncolored_pair()) throw PartialColoringError(p->u, p->v);
}

// Colored pairs grouped by color id, each class in lexicographic pair order.
std::map<int, std::vector<VertexPair>> color_classes(const EdgeColoring& coloring) {
    std::map<int, std::vector<VertexPair>> classes;
    for (int i = 0; i < coloring.pair_count(); ++i) {
        int c = coloring.color_by_index(i);
        if (c != EdgeColoring::kUncolored)
            classes[c].push_back(EdgeColoring::pair_at(coloring.n(), i));
    }
    return classes;
}

VertexSet pair_union(VertexPair a, VertexPair b) {
    VertexSet vs{a.u, a.v};
    if (b.u != a.u && b.u != a.v) vs.push_back(b.u);
    if (b.v != a.u && b.v != a.v) vs.push_back(b.v);
    std::sort(vs.begin(), vs.end());
    return vs;
}

int repeats_in_mask(const EdgeColoring& coloring, std::uint64_t mask) {
    // r(S) = colored pairs within S minus distinct colors within S; the
    // callers guarantee a total coloring.
    std::vector<Vertex> vs;
    for (int v = 0; v < coloring.n(); ++v)
        if (mask >> v & 1) vs.push_back(v);
    if (vs.size() < 2) return 0;
    return count_repeats(coloring, vs);
}

}  // namespace

MultiHypergraph build_repeat_quadratic(const EdgeColoring& coloring,
                                       const RepeatBuildPolicy& policy) {
    require_total(coloring);
    const int n = coloring.n();
    MultiHypergraph h(n, policy.padding == PaddingRule::Padded ? Uniformity::Four
                                                               : Uniformity::Mixed);
    for (const auto& [c, edges] : color_classes(coloring)) {
        VertexPair rep = edges.front();
        if (auto it = policy.representatives.find(c); it != policy.representatives.end()) {
            rep = it->second;
            if (coloring.color(rep.u, rep.v) != c)
                throw std::invalid_argument("representative for color " + std::to_string(c) +
                                            " does not carry that color");
        }
        for (const VertexPair& e : edges) {
            if (e == rep) continue;
            VertexSet vs = pair_union(e, rep);
            if (vs.size() == 3 && policy.padding == PaddingRule::Padded) {
                for (Vertex v = 0; v < n; ++v) {
                    if (!std::binary_search(vs.begin(), vs.end(), v)) {
                        vs.insert(std::lower_bound(vs.begin(), vs.end(), v), v);
                        break;
                    }
                }
                if (vs.size() != 4)
                    throw std::invalid_argument("padded mode needs n >= 4");
            }
            h.add_edge(vs);
        }
    }
    return h;
}

MultiHypergraph build_repeat_linear(const EdgeColoring& coloring) {
    require_total(coloring);
    const int n = coloring.n();
    MultiHypergraph h(n, Uniformity::Three);
    for (Vertex v = 0; v < n; ++v) {
        // incident edges of v grouped by color, lexicographic within a group
        std::map<int, std::vector<VertexPair>> at_v;
        for (Vertex w = 0; w < n; ++w) {
            if (w == v) continue;
            at_v[coloring.color(v, w)].push_back(VertexPair(v, w));
        }
        for (auto& [c, edges] : at_v) {
            if (edges.size() < 2) continue;
            std::sort(edges.begin(), edges.end());
            for (std::size_t i = 1; i < edges.size(); ++i)
                h.add_edge(pair_union(edges[0], edges[i]));
        }
    }
    return h;
}

std::optional<ViolationWitness> check_faithfulness(const EdgeColoring& coloring,
                                                   const MultiHypergraph& h, PaddingRule mode) {
    require_total(coloring);
    const int n = coloring.n();
    if (n != h.n()) throw std::invalid_argument("coloring and hypergraph disagree on n");
    if (n > 16) throw std::invalid_argument("exhaustive faithfulness check requires n <= 16");

    const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
        long long induced = h.induced_edge_count(mask);
        long long repeats = repeats_in_mask(coloring, mask);
        bool bad = mode == PaddingRule::Strict ? induced != repeats
                                               : (induced > repeats ||
                                                  (mask == full && induced != repeats));
        if (bad) {
            VertexSet vs;
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) vs.push_back(v);
            return ViolationWitness{"faithfulness", vs, std::nullopt, repeats, induced};
        }
    }
    return std::nullopt;
}

}  // namespace gramsey
