#ifndef GRAMSEY_HYPERGRAPH_HPP
#define GRAMSEY_HYPERGRAPH_HPP

#include <cstdint>
#include <vector>

#include "gramsey/types.hpp"

namespace gramsey {

enum class Uniformity { Mixed = 0, Three = 3, Four = 4 };

struct HyperEdge {
    VertexSet vertices;  // sorted, distinct
    long long multiplicity = 1;

    friend bool operator==(const HyperEdge&, const HyperEdge&) = default;
};

/// Vertex-set hypergraph with edge multiplicities. Uniform (r = 3 or 4) or
/// mixed with edge sizes in {3,4}. Edges are kept sorted lexicographically and
/// duplicate vertex sets are aggregated into one entry.
class MultiHypergraph {
public:
    explicit MultiHypergraph(int n, Uniformity r = Uniformity::Four);

    int n() const { return n_; }
    Uniformity uniformity() const { return r_; }

    void add_edge(std::vector<Vertex> vertices, long long multiplicity = 1);

    const std::vector<HyperEdge>& edges() const { return edges_; }
    std::size_t distinct_edge_count() const { return edges_.size(); }
    long long total_edge_count() const;  // with multiplicity
    bool is_simple() const;

    // Multiplicity-weighted degree per vertex.
    std::vector<long long> degrees() const;

    // Bitmask of each distinct edge, aligned with edges(). Requires n <= 64.
    const std::vector<std::uint64_t>& edge_masks() const { return masks_; }
    // Total multiplicity of edges fully inside the vertex mask.
    long long induced_edge_count(std::uint64_t vertex_mask) const;

    friend bool operator==(const MultiHypergraph&, const MultiHypergraph&) = default;

private:
    int n_;
    Uniformity r_;
    std::vector<HyperEdge> edges_;
    std::vector<std::uint64_t> masks_;
};

std::uint64_t vertex_set_mask(const VertexSet& vs);

}  // namespace gramsey

#endif
