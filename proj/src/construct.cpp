#include "gramsey/construct.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "gramsey/subsets.hpp"
#include "gramsey/verify.hpp"

namespace gramsey {

namespace detail {
const std::vector<std::array<Vertex, 4>>& design25_blocks();
const std::vector<std::array<Vertex, 4>>& design28_blocks();
}  // namespace detail

namespace {

// The three perfect matchings of a sorted 4-set, each as an ordered pair of
// pairs, listed in lexicographic order.
std::array<std::array<VertexPair, 2>, 3> block_matchings(const std::array<Vertex, 4>& b) {
    return {{
        {VertexPair(b[0], b[1]), VertexPair(b[2], b[3])},
        {VertexPair(b[0], b[2]), VertexPair(b[1], b[3])},
        {VertexPair(b[0], b[3]), VertexPair(b[1], b[2])},
    }};
}

BlockDesign cyclic_design_13() {
    std::vector<std::array<Vertex, 4>> blocks;
    for (int t = 0; t < 13; ++t) {
        std::array<Vertex, 4> b{t % 13, (1 + t) % 13, (3 + t) % 13, (9 + t) % 13};
        std::sort(b.begin(), b.end());
        blocks.push_back(b);
    }
    return design_from_blocks(13, std::move(blocks));
}

// Lines of the affine plane of order 4. GF(4) elements are 0..3 with
// xor addition; multiplication follows x^2 = x + 1.
BlockDesign affine_design_16() {
    static constexpr int mul[4][4] = {
        {0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    std::vector<std::array<Vertex, 4>> blocks;
    for (int slope = 0; slope < 4; ++slope) {
        for (int c = 0; c < 4; ++c) {
            std::array<Vertex, 4> b{};
            for (int x = 0; x < 4; ++x) b[x] = 4 * x + (mul[slope][x] ^ c);
            std::sort(b.begin(), b.end());
            blocks.push_back(b);
        }
    }
    for (int c = 0; c < 4; ++c) {
        std::array<Vertex, 4> b{};
        for (int y = 0; y < 4; ++y) b[y] = 4 * c + y;
        blocks.push_back(b);
    }
    return design_from_blocks(16, std::move(blocks));
}

BlockDesign greedy_design(int n) {
    std::vector<std::array<Vertex, 4>> blocks;
    if (n >= 4) {
        std::vector<bool> pair_used(static_cast<std::size_t>(binom2(n)), false);
        for_each_combination(n, 4, [&](const std::vector<int>& q) {
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = i + 1; j < 4; ++j)
                    if (pair_used[EdgeColoring::pair_index(n, q[i], q[j])]) return true;
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = i + 1; j < 4; ++j)
                    pair_used[EdgeColoring::pair_index(n, q[i], q[j])] = true;
            blocks.push_back({q[0], q[1], q[2], q[3]});
            return true;
        });
    }
    return design_from_blocks(n, std::move(blocks));
}

}  // namespace

bool design_supported_exact(int n) {
    return n == 13 || n == 16 || n == 25 || n == 28;
}

BlockDesign design_from_blocks(int n, std::vector<std::array<Vertex, 4>> blocks) {
    if (n < 1) throw std::invalid_argument("design: n must be >= 1");
    std::map<std::pair<Vertex, Vertex>, int> cover;
    for (auto& b : blocks) {
        std::sort(b.begin(), b.end());
        for (int i = 0; i < 4; ++i) {
            if (b[i] < 0 || b[i] >= n)
                throw std::invalid_argument("design block vertex out of range");
            if (i > 0 && b[i] == b[i - 1])
                throw std::invalid_argument("design block vertices must be distinct");
        }
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (++cover[{b[i], b[j]}] > 1)
                    throw std::invalid_argument(
                        "overlapping blocks: pair {" + std::to_string(b[i]) + "," +
                        std::to_string(b[j]) + "} covered twice");
    }
    std::sort(blocks.begin(), blocks.end());
    BlockDesign d;
    d.n = n;
    d.blocks = std::move(blocks);
    d.perfect = static_cast<long long>(cover.size()) == binom2(n);
    return d;
}

BlockDesign make_design(int n, DesignMode mode) {
    if (mode == DesignMode::Greedy) return greedy_design(n);
    switch (n) {
        case 13:
            return cyclic_design_13();
        case 16:
            return affine_design_16();
        case 25:
            return design_from_blocks(25, detail::design25_blocks());
        case 28:
            return design_from_blocks(28, detail::design28_blocks());
        default:
            throw std::invalid_argument("no built-in perfect design for n=" + std::to_string(n) +
                                        " (supported: 13, 16, 25, 28)");
    }
}

MultiHypergraph design_to_hypergraph(const BlockDesign& design) {
    MultiHypergraph h(design.n, Uniformity::Four);
    for (const auto& b : design.blocks) h.add_edge({b[0], b[1], b[2], b[3]});
    return h;
}

BlockDesign design_from_hypergraph(const MultiHypergraph& h) {
    if (h.uniformity() != Uniformity::Four || !h.is_simple())
        throw std::invalid_argument("design: simple 4-uniform hypergraph required");
    std::vector<std::array<Vertex, 4>> blocks;
    for (const HyperEdge& e : h.edges())
        blocks.push_back({e.vertices[0], e.vertices[1], e.vertices[2], e.vertices[3]});
    return design_from_blocks(h.n(), std::move(blocks));
}

EdgeColoring coloring_from_design(const BlockDesign& design) {
    // re-validate; external callers may hand-build the struct
    BlockDesign d = design_from_blocks(design.n, design.blocks);
    EdgeColoring coloring(d.n);
    int next = 0;
    for (const auto& b : d.blocks) {
        auto m = block_matchings(b).front();  // lexicographically first choice
        coloring.set_color(m[0].u, m[0].v, next);
        coloring.set_color(m[1].u, m[1].v, next);
        ++next;
    }
    for (int i = 0; i < coloring.pair_count(); ++i)
        if (coloring.color_by_index(i) == EdgeColoring::kUncolored)
            coloring.set_color_by_index(i, next++);
    return coloring;
}

EdgeColoring coloring_614(int n) {
    if (n < 1) throw std::invalid_argument("coloring_614: n must be >= 1");
    int i = n % 12;
    if ((i == 1 || i == 4) && design_supported_exact(n))
        return coloring_from_design(make_design(n));
    if (i == 0) i = 12;          // keep the head part at 1 mod 12
    const int head = n - i + 1;  // head = 1 mod 12
    if (head >= 1 && design_supported_exact(head)) {
        // perfect packing on vertices 0..head-1, unique colors elsewhere
        BlockDesign d = make_design(head);
        std::vector<std::array<Vertex, 4>> blocks = d.blocks;
        BlockDesign embedded = design_from_blocks(n, std::move(blocks));
        return coloring_from_design(embedded);
    }
    return coloring_from_design(make_design(n, DesignMode::Greedy));
}

EdgeColoring quad_coloring_from_hypergraph(const MultiHypergraph& h, int ell) {
    if (auto w = check_defH_properties(h, ell)) throw StructuralPreconditionError(*w);

    const int n = h.n();
    const auto& edges = h.edges();
    const auto& masks = h.edge_masks();
    const std::size_t m = edges.size();

    EdgeColoring coloring(n);
    std::vector<bool> processed(m, false);
    const int shared_total = static_cast<int>(m);
    int next_shared = 0;
    int next_unique = shared_total;  // unique ids follow all shared ids

    auto edge_pairs = [&](std::size_t idx) {
        const VertexSet& vs = edges[idx].vertices;
        std::vector<VertexPair> ps;
        for (std::size_t a = 0; a < 4; ++a)
            for (std::size_t b = a + 1; b < 4; ++b) ps.emplace_back(vs[a], vs[b]);
        return ps;
    };

    // Colors one edge: a fresh shared color on its lexicographically least
    // fully-uncolored perfect matching, fresh unique colors on the rest.
    auto process_edge = [&](std::size_t idx) {
        const VertexSet& vs = edges[idx].vertices;
        std::array<Vertex, 4> b{vs[0], vs[1], vs[2], vs[3]};
        std::optional<std::array<VertexPair, 2>> chosen;
        for (const auto& matching : block_matchings(b)) {
            if (!coloring.is_colored(matching[0].u, matching[0].v) &&
                !coloring.is_colored(matching[1].u, matching[1].v)) {
                chosen = matching;
                break;
            }
        }
        if (!chosen)
            throw std::runtime_error(
                "active-pair coloring: no uncolored disjoint pair choice left in edge; "
                "input admits no one-repeat-per-edge coloring under this processing order");
        coloring.set_color((*chosen)[0].u, (*chosen)[0].v, next_shared);
        coloring.set_color((*chosen)[1].u, (*chosen)[1].v, next_shared);
        ++next_shared;
        for (const VertexPair& p : edge_pairs(idx))
            if (!coloring.is_colored(p.u, p.v)) coloring.set_color(p.u, p.v, next_unique++);
        processed[idx] = true;
        return *chosen;
    };

    for (std::size_t seed = 0; seed < m; ++seed) {
        if (processed[seed]) continue;

        std::vector<VertexPair> active;
        std::uint64_t run_union = 0;
        int run_len = 0;

        auto activate = [&](const std::array<VertexPair, 2>& pairs, std::size_t idx) {
            active.push_back(pairs[0]);
            active.push_back(pairs[1]);
            run_union |= masks[idx];
            ++run_len;
            if (run_len > ell - 2)
                throw std::runtime_error(
                    "active-pair coloring: component run exceeded ell-2 edges; "
                    "structural property violated upstream");
        };

        activate(process_edge(seed), seed);

        for (;;) {
            // frontier: lexicographically least unprocessed edge containing an active pair
            std::optional<std::size_t> pick;
            for (std::size_t i = 0; i < m && !pick; ++i) {
                if (processed[i]) continue;
                std::uint64_t em = masks[i];
                for (const VertexPair& a : active) {
                    std::uint64_t am =
                        (std::uint64_t{1} << a.u) | (std::uint64_t{1} << a.v);
                    if ((em & am) == am) {
                        pick = i;
                        break;
                    }
                }
            }
            if (!pick) break;

            // the frontier edge must meet the run union in exactly one active pair
            std::uint64_t common = masks[*pick] & run_union;
            if (std::popcount(common) != 2)
                throw std::runtime_error(
                    "active-pair coloring: frontier edge meets union in != 1 pair; "
                    "structural property violated upstream");
            bool common_is_active = std::any_of(
                active.begin(), active.end(), [&](const VertexPair& a) {
                    return common == ((std::uint64_t{1} << a.u) | (std::uint64_t{1} << a.v));
                });
            if (!common_is_active)
                throw std::runtime_error(
                    "active-pair coloring: frontier intersection is not an active pair");

            activate(process_edge(*pick), *pick);
        }
    }

    for (int i = 0; i < coloring.pair_count(); ++i)
        if (coloring.color_by_index(i) == EdgeColoring::kUncolored)
            coloring.set_color_by_index(i, next_unique++);
    return coloring;
}

}  // namespace gramsey
