#include "doctest.h"

#include <random>

#include "gramsey/coloring.hpp"
#include "gramsey/subsets.hpp"
#include "support/generators.hpp"

using namespace gramsey;

TEST_CASE("pair indexing is a lexicographic bijection") {
    const int n = 7;
    int idx = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            CHECK(EdgeColoring::pair_index(n, u, v) == idx);
            CHECK(EdgeColoring::pair_index(n, v, u) == idx);
            VertexPair p = EdgeColoring::pair_at(n, idx);
            CHECK(p.u == u);
            CHECK(p.v == v);
            ++idx;
        }
    CHECK(idx == binom2(n));
}

TEST_CASE("count_colors on a monochromatic triangle") {
    EdgeColoring c(3);
    c.set_color(0, 1, 0);
    c.set_color(0, 2, 0);
    c.set_color(1, 2, 0);
    CHECK(count_colors(c, {0, 1, 2}) == 1);
    CHECK(count_repeats(c, {0, 1, 2}) == 2);
}

TEST_CASE("count_colors on a rainbow K4") {
    EdgeColoring c = EdgeColoring::rainbow(4);
    CHECK(count_colors(c, {0, 1, 2, 3}) == 6);
    CHECK(count_repeats(c, {0, 1, 2, 3}) == 0);
}

TEST_CASE("count_colors on a single block of the packing coloring") {
    // two disjoint pairs share a color, four pairs unique: 5 colors
    EdgeColoring c(4);
    c.set_color(0, 1, 0);
    c.set_color(2, 3, 0);
    c.set_color(0, 2, 1);
    c.set_color(0, 3, 2);
    c.set_color(1, 2, 3);
    c.set_color(1, 3, 4);
    CHECK(count_colors(c, {0, 1, 2, 3}) == 5);
    CHECK(count_repeats(c, {0, 1, 2, 3}) == 1);
}

TEST_CASE("count_colors raises on uncolored pairs naming the pair") {
    EdgeColoring c(4);
    c.set_color(0, 1, 0);
    try {
        count_colors(c, {0, 1, 2});
        FAIL("expected PartialColoringError");
    } catch (const PartialColoringError& e) {
        CHECK(e.pair == VertexPair(0, 2));
    }
}

TEST_CASE("normalize_colors relabels to first-use order") {
    EdgeColoring c(3);
    c.set_color(0, 1, 7);
    c.set_color(0, 2, 7);
    c.set_color(1, 2, 9);
    EdgeColoring norm = normalize_colors(c);
    CHECK(norm.color(0, 1) == 0);
    CHECK(norm.color(0, 2) == 0);
    CHECK(norm.color(1, 2) == 1);
    CHECK(normalize_colors(norm) == norm);  // idempotent
}

TEST_CASE("normalization yields dense ids and preserves c(S), r(S)") {
    std::mt19937_64 rng(12021);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4);
        EdgeColoring c = testsupport::random_coloring(n, 1 + static_cast<int>(rng() % 9), rng);
        // scramble ids to make normalization non-trivial
        EdgeColoring scrambled(n);
        for (int i = 0; i < c.pair_count(); ++i)
            scrambled.set_color_by_index(i, 3 * c.color_by_index(i) + 5);
        EdgeColoring norm = normalize_colors(scrambled);

        std::vector<int> used = norm.used_colors();
        CHECK(static_cast<int>(used.size()) == norm.palette_size());
        for (std::size_t i = 0; i < used.size(); ++i) CHECK(used[i] == static_cast<int>(i));
        CHECK(norm.palette_size() == scrambled.palette_size());

        for_each_combination(n, 4, [&](const std::vector<int>& s) {
            CHECK(count_colors(norm, s) == count_colors(scrambled, s));
            CHECK(count_repeats(norm, s) == count_repeats(scrambled, s));
            return true;
        });
    }
}

TEST_CASE("c(S) + r(S) identity and monotonicity under set extension") {
    std::mt19937_64 rng(77);
    EdgeColoring c = testsupport::random_coloring(8, 6, rng);
    for_each_combination(8, 5, [&](const std::vector<int>& s) {
        CHECK(count_colors(c, s) + count_repeats(c, s) == binom2(5));
        for (int extra = 0; extra < 8; ++extra) {
            if (std::binary_search(s.begin(), s.end(), extra)) continue;
            std::vector<int> bigger = s;
            bigger.push_back(extra);
            std::sort(bigger.begin(), bigger.end());
            CHECK(count_colors(c, bigger) >= count_colors(c, s));
            CHECK(count_repeats(c, bigger) >= count_repeats(c, s));
        }
        return true;
    });
}

TEST_CASE("invalid vertex sets are rejected") {
    EdgeColoring c = EdgeColoring::rainbow(4);
    CHECK_THROWS_AS(count_colors(c, {0, 1, 7}), std::invalid_argument);
    CHECK_THROWS_AS(c.set_color(0, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(c.set_color(0, 1, -2), std::invalid_argument);
}
