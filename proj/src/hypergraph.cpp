#include "gramsey/hypergraph.hpp"

#include <algorithm>
#include <numeric>

namespace gramsey {

std::uint64_t vertex_set_mask(const VertexSet& vs) {
    std::uint64_t m = 0;
    for (Vertex v : vs) m |= std::uint64_t{1} << v;
    return m;
}

MultiHypergraph::MultiHypergraph(int n, Uniformity r) : n_(n), r_(r) {
    if (n < 1) throw std::invalid_argument("MultiHypergraph: n must be >= 1");
    if (n > 64) throw std::invalid_argument("MultiHypergraph: n must be <= 64");
}

void MultiHypergraph::add_edge(std::vector<Vertex> vertices, long long multiplicity) {
    if (multiplicity < 1) throw std::invalid_argument("edge multiplicity must be >= 1");
    std::size_t raw = vertices.size();
    VertexSet vs = canonical_vertex_set(std::move(vertices), n_);
    if (vs.size() != raw) throw std::invalid_argument("edge vertices must be distinct");
    const int sz = static_cast<int>(vs.size());
    switch (r_) {
        case Uniformity::Three:
            if (sz != 3) throw std::invalid_argument("3-uniform hypergraph: edge size must be 3");
            break;
        case Uniformity::Four:
            if (sz != 4) throw std::invalid_argument("4-uniform hypergraph: edge size must be 4");
            break;
        case Uniformity::Mixed:
            if (sz != 3 && sz != 4)
                throw std::invalid_argument("mixed hypergraph: edge sizes must be 3 or 4");
            break;
    }
    auto it = std::lower_bound(edges_.begin(), edges_.end(), vs,
                               [](const HyperEdge& e, const VertexSet& key) {
                                   return e.vertices < key;
                               });
    if (it != edges_.end() && it->vertices == vs) {
        it->multiplicity += multiplicity;
        return;
    }
    std::size_t pos = static_cast<std::size_t>(it - edges_.begin());
    std::uint64_t m = vertex_set_mask(vs);
    edges_.insert(it, HyperEdge{std::move(vs), multiplicity});
    masks_.insert(masks_.begin() + pos, m);
}

long long MultiHypergraph::total_edge_count() const {
    return std::accumulate(edges_.begin(), edges_.end(), 0LL,
                           [](long long a, const HyperEdge& e) { return a + e.multiplicity; });
}

bool MultiHypergraph::is_simple() const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const HyperEdge& e) { return e.multiplicity == 1; });
}

std::vector<long long> MultiHypergraph::degrees() const {
    std::vector<long long> deg(n_, 0);
    for (const HyperEdge& e : edges_)
        for (Vertex v : e.vertices) deg[v] += e.multiplicity;
    return deg;
}

long long MultiHypergraph::induced_edge_count(std::uint64_t vertex_mask) const {
    long long total = 0;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if ((masks_[i] & ~vertex_mask) == 0) total += edges_[i].multiplicity;
    return total;
}

}  // namespace gramsey
