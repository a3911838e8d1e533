#include "gramsey/matcher.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "gramsey/subsets.hpp"

namespace gramsey {
namespace {

// mt19937_64 has a standardized sequence; combined with rejection sampling
// and explicit Fisher-Yates the shuffles are reproducible across platforms.
struct DetRng {
    std::mt19937_64 gen;

    explicit DetRng(std::uint64_t seed) : gen(seed) {}

    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = gen();
            if (r >= threshold) return r % bound;
        }
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }
};

// Is T spanned by its colored edges with at least |T|-2 repeats?
bool violating_set(const EdgeColoring& coloring, const std::vector<int>& T) {
    const int t = static_cast<int>(T.size());
    std::uint64_t covered = 0;
    std::vector<int> colors;
    for (int i = 0; i < t; ++i) {
        for (int j = i + 1; j < t; ++j) {
            int c = coloring.color(T[i], T[j]);
            if (c == EdgeColoring::kUncolored) continue;
            covered |= (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
            colors.push_back(c);
        }
    }
    if (covered != (std::uint64_t{1} << t) - 1) return false;
    std::sort(colors.begin(), colors.end());
    int repeats = 0;
    for (std::size_t i = 1; i < colors.size(); ++i)
        if (colors[i] == colors[i - 1]) ++repeats;
    return repeats >= t - 2;
}

}  // namespace

long long target_palette_size(int n, double epsilon) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (epsilon <= 0.0 || epsilon >= 1.0)
        throw std::invalid_argument("epsilon must lie in (0,1)");
    return n + static_cast<long long>(std::floor(std::pow(n, 1.0 - epsilon)));
}

ConfigCheckReport verify_G_conditions(const ColorGraphSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("spec.n must be >= 1");
    if (spec.palette_size < 1) throw std::invalid_argument("palette must be nonempty");
    if (spec.epsilon <= 0.0 || spec.epsilon >= 1.0)
        throw std::invalid_argument("epsilon must lie in (0,1)");
    ConfigCheckReport r;
    // Each K_n-edge uv lies in one model edge {uv, u_c, v_c} per color; each
    // (vertex,color) vertex v_c in one per neighbor of v. Two model vertices
    // share at most one edge (same-edge pairs, or u_c with an incident uv, or
    // u_c with v_c of the same color), so all codegrees are at most 1.
    r.a_degree = spec.palette_size;
    r.b_degree_max = spec.n - 1;
    r.max_pair_codegree = (spec.n >= 2) ? 1 : 0;
    return r;
}

std::optional<ViolationWitness> audit_configuration(const EdgeColoring& coloring, int p) {
    if (p < 4) throw std::invalid_argument("audit_configuration: p must be >= 4");
    const int n = coloring.n();
    std::optional<ViolationWitness> found;
    for (int t = 4; t <= std::min(p, n) && !found; ++t) {
        for_each_combination(n, t, [&](const std::vector<int>& T) {
            if (violating_set(coloring, T)) {
                // recompute the repeat count for the witness
                std::vector<int> colors;
                for (std::size_t i = 0; i < T.size(); ++i)
                    for (std::size_t j = i + 1; j < T.size(); ++j) {
                        int c = coloring.color(T[i], T[j]);
                        if (c != EdgeColoring::kUncolored) colors.push_back(c);
                    }
                std::sort(colors.begin(), colors.end());
                long long repeats = 0;
                for (std::size_t i = 1; i < colors.size(); ++i)
                    if (colors[i] == colors[i - 1]) ++repeats;
                found = ViolationWitness{"configuration", T, std::nullopt, repeats,
                                         std::nullopt};
                return false;
            }
            return true;
        });
    }
    return found;
}

bool incremental_config_ok(const EdgeColoring& coloring, Vertex u, Vertex v, int c, int p) {
    if (p < 4) throw std::invalid_argument("incremental_config_ok: p must be >= 4");
    const int n = coloring.n();

    // Other edges of color c. With per-vertex properness and a clean prior
    // state, a new violating set must contain {u,v} and one of these edges.
    std::vector<VertexPair> others;
    for (int i = 0; i < coloring.pair_count(); ++i) {
        if (coloring.color_by_index(i) == c) others.push_back(EdgeColoring::pair_at(n, i));
    }
    if (others.empty()) return true;

    EdgeColoring tentative = coloring;
    tentative.set_color(u, v, c);

    std::vector<int> rest;
    for (const VertexPair& e : others) {
        std::vector<int> base{u, v, e.u, e.v};
        std::sort(base.begin(), base.end());
        rest.clear();
        for (int w = 0; w < n; ++w)
            if (!std::binary_search(base.begin(), base.end(), w)) rest.push_back(w);

        bool bad = false;
        for (int t = 4; t <= std::min(p, n) && !bad; ++t) {
            for_each_combination(static_cast<int>(rest.size()), t - 4,
                                 [&](const std::vector<int>& extra_idx) {
                                     std::vector<int> T = base;
                                     for (int idx : extra_idx) T.push_back(rest[idx]);
                                     std::sort(T.begin(), T.end());
                                     if (violating_set(tentative, T)) {
                                         bad = true;
                                         return false;
                                     }
                                     return true;
                                 });
        }
        if (bad) return false;
    }
    return true;
}

namespace {

// One greedy attempt. Tracks per-vertex color usage alongside the coloring.
struct GreedyState {
    int n;
    int palette_size;
    int p;
    EdgeColoring coloring;
    std::vector<std::vector<bool>> used_at;

    GreedyState(int n, int palette_size, int p)
        : n(n),
          palette_size(palette_size),
          p(p),
          coloring(n),
          used_at(n, std::vector<bool>(palette_size, false)) {}

    void assign(Vertex u, Vertex v, int c) {
        coloring.set_color(u, v, c);
        used_at[u][c] = true;
        used_at[v][c] = true;
    }

    // The other endpoint of the a-or-b edge at x with color c, if any.
    std::optional<Vertex> mate(Vertex x, int c) const {
        if (!used_at[x][c]) return std::nullopt;
        for (Vertex y = 0; y < n; ++y)
            if (y != x && coloring.color(x, y) == c) return y;
        return std::nullopt;
    }

    // Edges of the maximal (a,b)-alternating path starting at x.
    std::vector<VertexPair> alternating_path(Vertex x, int a, int b) const {
        std::vector<VertexPair> path;
        int want = used_at[x][a] ? a : b;
        Vertex cur = x;
        std::optional<Vertex> prev;
        while (auto next = mate(cur, want)) {
            if (prev && *next == *prev) break;  // cycle through x cannot occur on paths
            path.emplace_back(cur, *next);
            prev = cur;
            cur = *next;
            want = (want == a) ? b : a;
        }
        return path;
    }

    void swap_path(const std::vector<VertexPair>& path, int a, int b) {
        for (const VertexPair& e : path) {
            int c = coloring.color(e.u, e.v);
            coloring.set_color(e.u, e.v, c == a ? b : a);
        }
        // a path vertex can keep a color through its other swapped edge, so
        // recompute the two flags from the coloring
        for (const VertexPair& e : path) {
            for (Vertex x : {e.u, e.v}) {
                for (int c : {a, b}) {
                    bool present = false;
                    for (Vertex y = 0; y < n && !present; ++y)
                        if (y != x && coloring.color(x, y) == c) present = true;
                    used_at[x][c] = present;
                }
            }
        }
    }

    // Dead-end repair for pair (u,v): pick a free at u and b free at v, swap
    // the (a,b)-path at u when it avoids v, which frees b at both endpoints.
    // Commits only when the swapped coloring and the new assignment stay
    // configuration-free.
    bool repair_and_assign(Vertex u, Vertex v, const std::vector<int>& palette) {
        for (int a : palette) {
            if (used_at[u][a]) continue;
            for (int b : palette) {
                if (b == a || used_at[v][b]) continue;
                std::vector<VertexPair> path = alternating_path(u, a, b);
                bool touches_v = false;
                for (const VertexPair& e : path)
                    if (e.u == v || e.v == v) touches_v = true;
                if (touches_v || path.empty()) continue;

                swap_path(path, a, b);
                if (!used_at[u][b] && !used_at[v][b] &&
                    !audit_configuration(coloring, p).has_value() &&
                    incremental_config_ok(coloring, u, v, b, p)) {
                    assign(u, v, b);
                    return true;
                }
                swap_path(path, a, b);  // undo
            }
        }
        return false;
    }
};

}  // namespace

MatcherResult find_avoiding_coloring(int n, int p, int palette_size, std::uint64_t seed,
                                     int max_restarts) {
    if (n < 2) throw std::invalid_argument("find_avoiding_coloring: n must be >= 2");
    if (p < 4) throw std::invalid_argument("find_avoiding_coloring: p must be >= 4");
    if (palette_size < 1) throw std::invalid_argument("palette_size must be >= 1");
    if (max_restarts < 0) throw std::invalid_argument("max_restarts must be >= 0");

    MatcherResult result;
    result.seed = seed;

    std::optional<VertexPair> last_stuck;
    for (int restart = 0; restart <= max_restarts; ++restart) {
        DetRng rng(seed + static_cast<std::uint64_t>(restart));

        std::vector<int> pair_order(static_cast<std::size_t>(binom2(n)));
        for (std::size_t i = 0; i < pair_order.size(); ++i) pair_order[i] = static_cast<int>(i);
        rng.shuffle(pair_order);

        // one seed-shuffled palette per attempt, scanned first-fit for every
        // pair: early colors fill up into large classes, later colors stay
        // flexible for the endgame
        std::vector<int> palette(palette_size);
        for (int i = 0; i < palette_size; ++i) palette[i] = i;
        rng.shuffle(palette);

        GreedyState state(n, palette_size, p);
        bool stuck = false;

        for (int idx : pair_order) {
            VertexPair e = EdgeColoring::pair_at(n, idx);
            int chosen = -1;
            for (int c : palette) {
                if (state.used_at[e.u][c] || state.used_at[e.v][c]) continue;
                if (!incremental_config_ok(state.coloring, e.u, e.v, c, p)) continue;
                chosen = c;
                break;
            }
            if (chosen >= 0) {
                state.assign(e.u, e.v, chosen);
                continue;
            }
            if (!state.repair_and_assign(e.u, e.v, palette)) {
                last_stuck = e;
                stuck = true;
                break;
            }
        }

        if (!stuck) {
            result.coloring = std::move(state.coloring);
            result.restarts_used = restart;
            return result;
        }
    }

    result.restarts_used = max_restarts;
    result.failure = MatcherFailure{*last_stuck, max_restarts};
    return result;
}

}  // namespace gramsey
