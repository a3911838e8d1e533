#ifndef GRAMSEY_COLORING_HPP
#define GRAMSEY_COLORING_HPP

#include <optional>
#include <vector>

#include "gramsey/types.hpp"

namespace gramsey {

/// Edge coloring of the complete graph K_n. Vertices are 0..n-1; color ids are
/// non-negative integers and a pair may be explicitly uncolored. Values are
/// cheap to copy; treat an instance as immutable once it is shared.
class EdgeColoring {
public:
    static constexpr int kUncolored = -1;

    explicit EdgeColoring(int n);

    // Every pair gets its own color, in lexicographic pair order.
    static EdgeColoring rainbow(int n);

    int n() const { return n_; }
    int pair_count() const { return static_cast<int>(colors_.size()); }

    bool is_colored(Vertex u, Vertex v) const { return color(u, v) != kUncolored; }
    int color(Vertex u, Vertex v) const { return colors_[pair_index(n_, u, v)]; }
    void set_color(Vertex u, Vertex v, int c);
    void clear_color(Vertex u, Vertex v);

    bool is_total() const;
    std::optional<VertexPair> first_uncolored_pair() const;

    long long colored_pair_count() const;
    // Number of distinct color ids currently assigned.
    int palette_size() const;
    std::vector<int> used_colors() const;  // sorted distinct ids

    int color_by_index(int pair_idx) const { return colors_[pair_idx]; }
    void set_color_by_index(int pair_idx, int c);

    // Lexicographic pair order: (0,1),(0,2),...,(0,n-1),(1,2),...
    static int pair_index(int n, Vertex u, Vertex v);
    static VertexPair pair_at(int n, int idx);

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

private:
    int n_;
    std::vector<int> colors_;
};

// Number of distinct colors on pairs inside S. Throws PartialColoringError
// naming the first uncolored pair inside S.
int count_colors(const EdgeColoring& coloring, const VertexSet& S);

// binom(|S|,2) - count_colors(coloring, S).
int count_repeats(const EdgeColoring& coloring, const VertexSet& S);

// Relabels color ids to first-use order along lexicographic pair order.
// Requires a total coloring. Idempotent; palette size is preserved.
EdgeColoring normalize_colors(const EdgeColoring& coloring);

}  // namespace gramsey

#endif
