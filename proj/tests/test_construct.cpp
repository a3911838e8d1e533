#include "doctest.h"

#include <map>
#include <random>

#include "gramsey/bounds.hpp"
#include "gramsey/construct.hpp"
#include "gramsey/repeatgraph.hpp"
#include "gramsey/subsets.hpp"
#include "gramsey/verify.hpp"
#include "support/generators.hpp"

using namespace gramsey;

namespace {

// Direct pair-coverage census, independent of the design validator.
std::map<std::pair<Vertex, Vertex>, int> pair_coverage(const BlockDesign& d) {
    std::map<std::pair<Vertex, Vertex>, int> cover;
    for (const auto& b : d.blocks)
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) ++cover[{b[i], b[j]}];
    return cover;
}

}  // namespace

TEST_CASE("built-in designs are perfect packings") {
    struct Row {
        int n;
        int blocks;
    };
    for (Row row : {Row{13, 13}, Row{16, 20}, Row{25, 50}, Row{28, 63}}) {
        BlockDesign d = make_design(row.n);
        CHECK(static_cast<int>(d.blocks.size()) == row.blocks);
        CHECK(d.perfect);
        auto cover = pair_coverage(d);
        CHECK(static_cast<long long>(cover.size()) == binom2(row.n));
        for (const auto& [pair, count] : cover) CHECK(count == 1);
    }
}

TEST_CASE("unsupported exact designs are rejected, greedy succeeds anywhere") {
    CHECK_THROWS_AS(make_design(7), std::invalid_argument);
    CHECK_THROWS_AS(make_design(12), std::invalid_argument);

    BlockDesign g6 = make_design(6, DesignMode::Greedy);
    CHECK(g6.blocks.size() <= 2);  // binom(6,2)/6 = 2.5 is not an integer
    CHECK(!g6.perfect);
    CHECK(g6.blocks.size() == 1);

    BlockDesign g13 = make_design(13, DesignMode::Greedy);
    CHECK(!g13.blocks.empty());
    for (const auto& [pair, count] : pair_coverage(g13)) CHECK(count == 1);
}

TEST_CASE("design_from_blocks rejects overlapping blocks") {
    CHECK_THROWS_AS(design_from_blocks(8, {{0, 1, 2, 3}, {0, 1, 4, 5}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(design_from_blocks(8, {{0, 1, 2, 9}}), std::invalid_argument);
    BlockDesign ok = design_from_blocks(8, {{4, 5, 6, 7}, {0, 1, 2, 3}});
    CHECK(ok.blocks[0] == std::array<Vertex, 4>{0, 1, 2, 3});
    CHECK(!ok.perfect);
}

TEST_CASE("coloring_from_design: n=13 gives 65 colors and a valid (6,14)-coloring") {
    EdgeColoring c = coloring_from_design(make_design(13));
    CHECK(c.palette_size() == 65);
    CHECK(!check_pq_coloring(c, 6, 14).has_value());
}

TEST_CASE("coloring_from_design: empty design is the rainbow coloring") {
    EdgeColoring c = coloring_from_design(design_from_blocks(5, {}));
    CHECK(c.palette_size() == 10);
    CHECK(normalize_colors(c) == EdgeColoring::rainbow(5));
}

TEST_CASE("design colorings: every 6-set spans at most one repeat") {
    EdgeColoring c = coloring_from_design(make_design(13));
    int max_repeats = 0;
    for_each_combination(13, 6, [&](const std::vector<int>& s) {
        max_repeats = std::max(max_repeats, count_repeats(c, s));
        return true;
    });
    CHECK(max_repeats == 1);

    // Two blocks that share one vertex span 7 vertices with two repeats.
    BlockDesign d = make_design(13);
    const auto& b0 = d.blocks[0];
    for (const auto& b1 : d.blocks) {
        VertexSet s(b0.begin(), b0.end());
        s.insert(s.end(), b1.begin(), b1.end());
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.size() != 7) continue;
        CHECK(count_repeats(c, s) == 2);
        return;
    }
    FAIL("no pair of blocks sharing exactly one vertex");
}

TEST_CASE("the repeat hypergraph of a design coloring is the design itself") {
    BlockDesign d = make_design(13);
    EdgeColoring c = coloring_from_design(d);
    MultiHypergraph h = build_repeat_quadratic(c);
    REQUIRE(h.distinct_edge_count() == 13);
    CHECK(h.is_simple());
    for (std::size_t i = 0; i < 13; ++i) {
        const auto& b = d.blocks[i];
        CHECK(h.edges()[i].vertices == VertexSet{b[0], b[1], b[2], b[3]});
    }
}

TEST_CASE("coloring_614 palette sizes") {
    CHECK(coloring_614(13).palette_size() == 65);
    CHECK(coloring_614(16).palette_size() == 100);

    EdgeColoring c14 = coloring_614(14);  // partition 13 + 1: 65 + 13 cross pairs
    CHECK(c14.palette_size() == 78);
    CHECK(!check_pq_coloring(c14, 6, 14).has_value());

    EdgeColoring c17 = coloring_614(17);  // partition 13 + 4
    CHECK(c17.palette_size() == 65 + 13 * 4 + 6);
    CHECK(!check_pq_coloring(c17, 6, 14).has_value());

    EdgeColoring c9 = coloring_614(9);  // greedy fallback territory
    CHECK(!check_pq_coloring(c9, 6, 14).has_value());

    EdgeColoring c12 = coloring_614(12);  // 12 = 0 mod 12: head part is K_1
    CHECK(!check_pq_coloring(c12, 6, 14).has_value());
}

TEST_CASE("quad coloring from the 13-block design matches the block rule") {
    BlockDesign d = make_design(13);
    MultiHypergraph h = design_to_hypergraph(d);
    EdgeColoring c = quad_coloring_from_hypergraph(h, 3);
    CHECK(c.palette_size() == static_cast<int>(binom2(13)) - 13);
    CHECK(!check_pq_coloring(c, 6, 14).has_value());
    CHECK(normalize_colors(c) == normalize_colors(coloring_from_design(d)));
}

TEST_CASE("quad coloring from an empty hypergraph is rainbow") {
    MultiHypergraph h(7, Uniformity::Four);
    EdgeColoring c = quad_coloring_from_hypergraph(h, 3);
    CHECK(c.palette_size() == binom2(7));
}

TEST_CASE("quad coloring rejects hypergraphs failing the precondition") {
    MultiHypergraph h(8, Uniformity::Four);
    h.add_edge({0, 1, 2, 3});
    try {
        quad_coloring_from_hypergraph(h, 3);
        FAIL("expected StructuralPreconditionError");
    } catch (const StructuralPreconditionError& e) {
        CHECK(e.witness.kind == "defH-property-3-degree");
    }
}

TEST_CASE("quad coloring on random valid instances: palette, repeats, inversion") {
    std::mt19937_64 rng(6060);
    int nonempty = 0;
    for (int trial = 0; trial < 25; ++trial) {
        int ell = (trial % 2 == 0) ? 3 : 4;
        int n = 10 + static_cast<int>(rng() % 5);  // 10..14
        MultiHypergraph h = testsupport::random_defh_instance(n, ell, rng);
        REQUIRE(!check_defH_properties(h, ell).has_value());
        if (h.distinct_edge_count() > 0) ++nonempty;

        EdgeColoring c = quad_coloring_from_hypergraph(h, ell);
        CHECK(c.palette_size() ==
              static_cast<int>(binom2(n) - h.total_edge_count()));

        // exactly one repeat per hyperedge and none elsewhere: reading the
        // repeat hypergraph back recovers H
        MultiHypergraph back = build_repeat_quadratic(c);
        CHECK(back.is_simple());
        CHECK(back.distinct_edge_count() == h.distinct_edge_count());
        for (std::size_t i = 0; i < back.distinct_edge_count(); ++i)
            CHECK(back.edges()[i].vertices == h.edges()[i].vertices);

        int p = 2 * ell;
        if (p <= n)
            CHECK(!check_pq_coloring(c, p, static_cast<int>(thresholds(p).q_quad))
                       .has_value());

        // determinism
        CHECK(quad_coloring_from_hypergraph(h, ell) == c);
    }
    CHECK(nonempty >= 15);
}

TEST_CASE("quad coloring handles pair-sharing components (ell=4)") {
    std::mt19937_64 rng(8181);
    bool found = false;
    for (int trial = 0; trial < 300 && !found; ++trial) {
        int n = 12 + static_cast<int>(rng() % 3);
        MultiHypergraph h = testsupport::random_defh_instance(n, 4, rng);
        if (check_defH_properties(h, 4).has_value()) continue;
        H4CertifyReport census = certify_h4_pair_count(h, 4);
        REQUIRE(census.ok());
        if (census.components_by_order.size() < 2 || census.components_by_order[1] == 0)
            continue;
        found = true;

        EdgeColoring c = quad_coloring_from_hypergraph(h, 4);
        CHECK(c.palette_size() == static_cast<int>(binom2(n) - h.total_edge_count()));
        MultiHypergraph back = build_repeat_quadratic(c);
        CHECK(back.distinct_edge_count() == h.distinct_edge_count());
        for (std::size_t i = 0; i < back.distinct_edge_count(); ++i)
            CHECK(back.edges()[i].vertices == h.edges()[i].vertices);
    }
    CHECK(found);  // the generator must exercise a two-edge component
}
