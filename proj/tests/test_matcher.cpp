#include "doctest.h"

#include <random>
#include <set>

#include "gramsey/matcher.hpp"
#include "gramsey/subsets.hpp"
#include "gramsey/verify.hpp"
#include "support/generators.hpp"

using namespace gramsey;

TEST_CASE("model degree report") {
    ConfigCheckReport r = verify_G_conditions({10, 13, 0.5});
    CHECK(r.a_degree == 13);
    CHECK(r.b_degree_max == 9);
    CHECK(r.max_pair_codegree == 1);

    ConfigCheckReport r2 = verify_G_conditions({4, 6, 0.3});
    CHECK(r2.a_degree == 6);
    CHECK(r2.b_degree_max == 3);
    CHECK(r2.max_pair_codegree == 1);

    CHECK_THROWS_AS(verify_G_conditions({4, 0, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(verify_G_conditions({4, 6, 1.5}), std::invalid_argument);
    CHECK(target_palette_size(10, 0.5) == 13);  // 10 + floor(10^0.5)
}

TEST_CASE("audit: rainbow is configuration-free") {
    CHECK(!audit_configuration(EdgeColoring::rainbow(8), 6).has_value());
}

TEST_CASE("audit: one disjoint repeat is fine at p=4, a double repeat is not") {
    EdgeColoring c = EdgeColoring::rainbow(6);
    c.set_color(0, 1, 90);
    c.set_color(2, 3, 90);
    CHECK(!audit_configuration(c, 4).has_value());  // r = 1 < |S|-2 = 2

    c.set_color(0, 2, 91);
    c.set_color(1, 3, 91);
    auto w = audit_configuration(c, 4);
    REQUIRE(w.has_value());
    CHECK(w->subset == VertexSet{0, 1, 2, 3});
    CHECK(w->repeats == 2);
}

TEST_CASE("audit flags the smallest spanned violating set") {
    // two repeats spread over six vertices, plus a double repeat on four:
    // the four-vertex set is reported first
    EdgeColoring c = EdgeColoring::rainbow(8);
    c.set_color(2, 3, 90);
    c.set_color(4, 5, 90);
    c.set_color(2, 4, 91);
    c.set_color(3, 5, 91);  // S = {2,3,4,5}: r = 2 = |S|-2
    c.set_color(0, 6, 92);
    c.set_color(1, 7, 92);
    auto w = audit_configuration(c, 6);
    REQUIRE(w.has_value());
    CHECK(w->subset == VertexSet{2, 3, 4, 5});
}

TEST_CASE("audit works on partial colorings") {
    EdgeColoring c(6);
    c.set_color(0, 1, 0);
    c.set_color(2, 3, 0);
    c.set_color(0, 2, 1);
    c.set_color(1, 3, 1);
    auto w = audit_configuration(c, 5);
    REQUIRE(w.has_value());
    CHECK(w->subset == VertexSet{0, 1, 2, 3});
}

TEST_CASE("matcher succeeds trivially with a rainbow-sized palette") {
    MatcherResult r = find_avoiding_coloring(6, 4, 15, 7, 5);
    REQUIRE(r.ok());
    CHECK(r.restarts_used == 0);
    CHECK(!check_pq_coloring(*r.coloring, 4, 5).has_value());
}

TEST_CASE("matcher output is deterministic in all parameters") {
    MatcherResult a = find_avoiding_coloring(9, 4, 10, 123, 20);
    MatcherResult b = find_avoiding_coloring(9, 4, 10, 123, 20);
    REQUIRE(a.ok());
    REQUIRE(b.ok());
    CHECK(*a.coloring == *b.coloring);
    CHECK(a.restarts_used == b.restarts_used);

    MatcherResult c = find_avoiding_coloring(9, 4, 10, 124, 20);
    REQUIRE(c.ok());
    CHECK(*a.coloring != *c.coloring);  // different seed, different run
}

TEST_CASE("matcher colorings never repeat a color at a vertex") {
    MatcherResult r = find_avoiding_coloring(10, 5, 11, 3, 50);
    REQUIRE(r.ok());
    const EdgeColoring& c = *r.coloring;
    for (Vertex v = 0; v < 10; ++v) {
        std::set<int> seen;
        for (Vertex w = 0; w < 10; ++w) {
            if (w == v) continue;
            CHECK(seen.insert(c.color(v, w)).second);
        }
    }
    // every color class is a matching, and the (5, q_lin(5)) condition holds
    CHECK(!check_pq_coloring(c, 5, 8).has_value());
    CHECK(!audit_configuration(c, 5).has_value());
}

TEST_CASE("matcher fails cleanly when the palette is too small") {
    // proper edge coloring of K_6 needs 5 colors
    MatcherResult r = find_avoiding_coloring(6, 4, 3, 1, 4);
    CHECK(!r.ok());
    REQUIRE(r.failure.has_value());
    CHECK(r.failure->restarts_used == 4);
    CHECK(r.restarts_used == 4);
}

TEST_CASE("incremental checker agrees with the brute-force audit") {
    // replay greedy constructions; after each tentative assignment the
    // incremental verdict must match a full audit on the amended coloring
    std::mt19937_64 rng(2112);
    for (int trial = 0; trial < 6; ++trial) {
        int n = 7 + static_cast<int>(rng() % 4);  // up to 10
        int p = 4 + static_cast<int>(rng() % 2);
        int palette = n + 1;
        EdgeColoring coloring(n);
        std::vector<std::vector<bool>> used(n, std::vector<bool>(palette, false));

        std::vector<int> order(static_cast<std::size_t>(binom2(n)));
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::shuffle(order.begin(), order.end(), rng);

        for (int idx : order) {
            VertexPair e = EdgeColoring::pair_at(n, idx);
            int assigned = -1;
            for (int c = 0; c < palette; ++c) {
                if (used[e.u][c] || used[e.v][c]) continue;
                bool fast = incremental_config_ok(coloring, e.u, e.v, c, p);
                EdgeColoring probe = coloring;
                probe.set_color(e.u, e.v, c);
                bool slow = !audit_configuration(probe, p).has_value();
                CHECK(fast == slow);
                if (fast && assigned < 0) assigned = c;
            }
            if (assigned >= 0) {
                coloring.set_color(e.u, e.v, assigned);
                used[e.u][assigned] = true;
                used[e.v][assigned] = true;
            }
        }
    }
}
