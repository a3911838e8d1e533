#include "gramsey/coloring.hpp"

#include <algorithm>
#include <set>

namespace gramsey {

VertexSet canonical_vertex_set(std::vector<Vertex> vs, int n) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (Vertex v : vs) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("vertex " + std::to_string(v) +
                                        " out of range for n=" + std::to_string(n));
    }
    return vs;
}

long long binom2(long long n) { return n * (n - 1) / 2; }

EdgeColoring::EdgeColoring(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("EdgeColoring: n must be >= 1");
    colors_.assign(static_cast<std::size_t>(binom2(n)), kUncolored);
}

EdgeColoring EdgeColoring::rainbow(int n) {
    EdgeColoring c(n);
    for (int i = 0; i < c.pair_count(); ++i) c.colors_[i] = i;
    return c;
}

int EdgeColoring::pair_index(int n, Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n || u == v)
        throw std::invalid_argument("pair {" + std::to_string(u) + "," + std::to_string(v) +
                                    "} out of range for n=" + std::to_string(n));
    // lexicographic pair order
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

VertexPair EdgeColoring::pair_at(int n, int idx) {
    int u = 0;
    int row = n - 1;
    while (idx >= row) {
        idx -= row;
        --row;
        ++u;
    }
    return VertexPair(u, u + 1 + idx);
}

void EdgeColoring::set_color(Vertex u, Vertex v, int c) {
    if (c < 0) throw std::invalid_argument("color ids must be non-negative");
    colors_[pair_index(n_, u, v)] = c;
}

void EdgeColoring::set_color_by_index(int pair_idx, int c) {
    colors_.at(pair_idx) = c;
}

void EdgeColoring::clear_color(Vertex u, Vertex v) {
    colors_[pair_index(n_, u, v)] = kUncolored;
}

bool EdgeColoring::is_total() const {
    return std::find(colors_.begin(), colors_.end(), kUncolored) == colors_.end();
}

std::optional<VertexPair> EdgeColoring::first_uncolored_pair() const {
    for (int i = 0; i < pair_count(); ++i)
        if (colors_[i] == kUncolored) return pair_at(n_, i);
    return std::nullopt;
}

long long EdgeColoring::colored_pair_count() const {
    return static_cast<long long>(
        std::count_if(colors_.begin(), colors_.end(), [](int c) { return c != kUncolored; }));
}

int EdgeColoring::palette_size() const {
    std::set<int> used;
    for (int c : colors_)
        if (c != kUncolored) used.insert(c);
    return static_cast<int>(used.size());
}

std::vector<int> EdgeColoring::used_colors() const {
    std::set<int> used;
    for (int c : colors_)
        if (c != kUncolored) used.insert(c);
    return std::vector<int>(used.begin(), used.end());
}

int count_colors(const EdgeColoring& coloring, const VertexSet& S) {
    std::set<int> seen;
    for (std::size_t i = 0; i < S.size(); ++i) {
        for (std::size_t j = i + 1; j < S.size(); ++j) {
            int c = coloring.color(S[i], S[j]);
            if (c == EdgeColoring::kUncolored) throw PartialColoringError(S[i], S[j]);
            seen.insert(c);
        }
    }
    return static_cast<int>(seen.size());
}

int count_repeats(const EdgeColoring& coloring, const VertexSet& S) {
    return static_cast<int>(binom2(static_cast<long long>(S.size()))) -
           count_colors(coloring, S);
}

EdgeColoring normalize_colors(const EdgeColoring& coloring) {
    if (auto p = coloring.first_uncolored_pair()) throw PartialColoringError(p->u, p->v);
    EdgeColoring out(coloring.n());
    std::vector<int> relabel;  // old id -> new id, lazily grown
    int next = 0;
    for (int i = 0; i < coloring.pair_count(); ++i) {
        int c = coloring.color_by_index(i);
        if (c >= static_cast<int>(relabel.size())) relabel.resize(c + 1, -1);
        if (relabel[c] == -1) relabel[c] = next++;
        out.set_color_by_index(i, relabel[c]);
    }
    return out;
}

}  // namespace gramsey
