#ifndef GRAMSEY_TYPES_HPP
#define GRAMSEY_TYPES_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gramsey {

using Vertex = int;

// Unordered pair of distinct vertices, stored with u < v.
struct VertexPair {
    Vertex u;
    Vertex v;

    VertexPair() : u(0), v(1) {}
    VertexPair(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw std::invalid_argument("VertexPair: vertices must be distinct");
    }

    friend bool operator==(const VertexPair&, const VertexPair&) = default;
    friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

// Sorted set of distinct vertices.
using VertexSet = std::vector<Vertex>;

// Sorts, deduplicates and range-checks a vertex list against an ambient vertex count.
VertexSet canonical_vertex_set(std::vector<Vertex> vs, int n);

long long binom2(long long n);

// Certificate for a failed check: the offending vertex set plus whichever
// counts the check populated.
struct ViolationWitness {
    std::string kind;
    VertexSet subset;
    std::optional<long long> colors_seen;
    std::optional<long long> repeats;
    std::optional<long long> induced_edges;
};

// Raised when an operation that requires a total coloring meets an uncolored pair.
class PartialColoringError : public std::runtime_error {
public:
    PartialColoringError(Vertex u, Vertex v)
        : std::runtime_error("partial coloring: pair {" + std::to_string(u) + "," +
                             std::to_string(v) + "} is uncolored"),
          pair(u, v) {}

    VertexPair pair;
};

}  // namespace gramsey

#endif
