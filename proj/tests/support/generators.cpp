#include "support/generators.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "gramsey/subsets.hpp"
#include "gramsey/verify.hpp"

namespace gramsey::testsupport {

EdgeColoring random_coloring(int n, int palette, Rng& rng) {
    EdgeColoring c(n);
    std::uniform_int_distribution<int> dist(0, palette - 1);
    for (int i = 0; i < c.pair_count(); ++i) c.set_color_by_index(i, dist(rng));
    return normalize_colors(c);
}

EdgeColoring random_two_use_coloring(int n, Rng& rng, bool allow_adjacent) {
    EdgeColoring c(n);
    std::vector<int> order(static_cast<std::size_t>(c.pair_count()));
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::shuffle(order.begin(), order.end(), rng);

    int next = 0;
    std::vector<int> pending;  // indices waiting for a partner
    for (int idx : order) {
        VertexPair e = EdgeColoring::pair_at(n, idx);
        bool paired = false;
        if (rng() % 2 == 0) {
            for (std::size_t i = 0; i < pending.size(); ++i) {
                VertexPair f = EdgeColoring::pair_at(n, pending[i]);
                bool disjoint = f.u != e.u && f.u != e.v && f.v != e.u && f.v != e.v;
                if (!allow_adjacent && !disjoint) continue;
                int color = next++;
                c.set_color(e.u, e.v, color);
                c.set_color(f.u, f.v, color);
                pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(i));
                paired = true;
                break;
            }
        }
        if (!paired) pending.push_back(idx);
    }
    for (int idx : pending) c.set_color_by_index(idx, next++);
    return c;
}

MultiHypergraph random_defh_instance(int n, int ell, Rng& rng, double keep_probability) {
    std::vector<VertexSet> candidates;
    for_each_combination(n, 4, [&](const std::vector<int>& s) {
        candidates.push_back(s);
        return true;
    });
    std::shuffle(candidates.begin(), candidates.end(), rng);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    std::vector<VertexSet> family;
    std::vector<std::uint64_t> fmasks;
    auto creates_config = [&](std::uint64_t mask, int s, int k) {
        // grow unions from the new edge through the current family
        auto dfs = [&](auto&& self, std::size_t from, std::uint64_t u, int cnt) -> bool {
            if (cnt >= k) return std::popcount(u) <= s;
            // adding more edges only grows the union, so check as soon as cnt hits k
            for (std::size_t i = from; i < fmasks.size(); ++i) {
                std::uint64_t nu = u | fmasks[i];
                if (std::popcount(nu) > s) continue;
                if (self(self, i + 1, nu, cnt + 1)) return true;
            }
            return false;
        };
        return dfs(dfs, 0, mask, 1);
    };

    for (const VertexSet& cand : candidates) {
        if (coin(rng) > keep_probability) continue;
        std::uint64_t mask = vertex_set_mask(cand);
        if (creates_config(mask, 2 * ell, ell - 1)) continue;
        bool bad = false;
        for (int i = 2; i <= ell - 2 && !bad; ++i)
            if (creates_config(mask, 2 * i + 1, i)) bad = true;
        if (bad) continue;
        family.push_back(cand);
        fmasks.push_back(mask);
    }

    // enforce the degree condition by deleting edges at under-degree vertices
    for (;;) {
        std::vector<int> deg(n, 0);
        for (const VertexSet& e : family)
            for (Vertex v : e) ++deg[v];
        int low = -1;
        for (int v = 0; v < n; ++v)
            if (deg[v] > 0 && deg[v] < ell - 1) {
                low = v;
                break;
            }
        if (low < 0) break;
        std::erase_if(family, [&](const VertexSet& e) {
            return std::binary_search(e.begin(), e.end(), low);
        });
    }

    MultiHypergraph h(n, Uniformity::Four);
    for (const VertexSet& e : family) h.add_edge(e);
    return h;
}

namespace {

struct RgsEnumerator {
    int n, p, q;
    int pair_total;
    std::vector<VertexPair> pairs;
    std::vector<int> colors;
    int best;

    RgsEnumerator(int n, int p, int q) : n(n), p(p), q(q) {
        pair_total = static_cast<int>(binom2(n));
        for (int i = 0; i < pair_total; ++i) pairs.push_back(EdgeColoring::pair_at(n, i));
        colors.assign(pair_total, 0);
        best = pair_total + 1;
    }

    bool leaf_ok() const {
        EdgeColoring c(n);
        for (int i = 0; i < pair_total; ++i) c.set_color(pairs[i].u, pairs[i].v, colors[i]);
        bool ok = true;
        for_each_combination(n, p, [&](const std::vector<int>& s) {
            if (count_colors(c, s) < q) {
                ok = false;
                return false;
            }
            return true;
        });
        return ok;
    }

    void run(int t, int used) {
        if (t == pair_total) {
            if (used < best && leaf_ok()) best = used;
            return;
        }
        for (int c = 0; c <= used; ++c) {
            colors[t] = c;
            run(t + 1, std::max(used, c + 1));
        }
    }
};

}  // namespace

int oracle_min_colors(int n, int p, int q) {
    RgsEnumerator e(n, p, q);
    e.run(0, 0);
    return e.best;
}

bool oracle_sk_free(const MultiHypergraph& h, int s, long long k) {
    const int n = h.n();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (std::popcount(mask) > s) continue;
        long long count = 0;
        for (const HyperEdge& e : h.edges()) {
            bool inside = true;
            for (Vertex v : e.vertices)
                if (!(mask >> v & 1)) inside = false;
            if (inside) count += e.multiplicity;
        }
        if (count >= k) return false;
    }
    return true;
}

int oracle_max_pairwise_free(int n, int s) {
    std::vector<std::uint64_t> cand;
    for_each_combination(n, 4, [&](const std::vector<int>& q) {
        cand.push_back(vertex_set_mask(q));
        return true;
    });
    int best = 0;
    auto dfs = [&](auto&& self, std::size_t from, std::vector<std::uint64_t>& chosen) -> void {
        best = std::max(best, static_cast<int>(chosen.size()));
        for (std::size_t i = from; i < cand.size(); ++i) {
            bool ok = true;
            for (std::uint64_t m : chosen)
                if (std::popcount(m | cand[i]) <= s) {
                    ok = false;
                    break;
                }
            if (ok) {
                chosen.push_back(cand[i]);
                self(self, i + 1, chosen);
                chosen.pop_back();
            }
        }
    };
    std::vector<std::uint64_t> chosen;
    dfs(dfs, 0, chosen);
    return best;
}

}  // namespace gramsey::testsupport
