#include "doctest.h"

#include <sstream>

#include "gramsey/io.hpp"

using namespace gramsey;

TEST_CASE("coloring round trip is byte identical") {
    EdgeColoring c = EdgeColoring::rainbow(5);
    std::string text = coloring_to_string(c);
    std::istringstream in(text);
    EdgeColoring parsed = read_coloring(in);
    CHECK(parsed == c);
    CHECK(coloring_to_string(parsed) == text);
}

TEST_CASE("coloring parser handles comments and whitespace") {
    std::istringstream in(
        "# a comment\n"
        "  3   2   # header\n"
        "\n"
        "0 1 0\n"
        "0 2 0  # repeated color\n"
        "1 2 1\n");
    EdgeColoring c = read_coloring(in);
    CHECK(c.n() == 3);
    CHECK(c.palette_size() == 2);
    CHECK(c.color(0, 2) == 0);
}

TEST_CASE("coloring parser reports line numbers") {
    std::istringstream bad(
        "3 1\n"
        "0 1 0\n"
        "0 1 0\n");
    try {
        read_coloring(bad);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("coloring header palette mismatch is rejected") {
    std::istringstream bad(
        "3 5\n"
        "0 1 0\n"
        "0 2 0\n"
        "1 2 1\n");
    CHECK_THROWS_AS(read_coloring(bad), ParseError);
}

TEST_CASE("hypergraph duplicate edge lines aggregate multiplicities") {
    std::istringstream in(
        "6 4 3\n"
        "1 0 1 2 3\n"
        "2 0 1 2 3\n"
        "1 1 2 4 5\n");
    MultiHypergraph h = read_hypergraph(in);
    CHECK(h.distinct_edge_count() == 2);
    CHECK(h.total_edge_count() == 4);
    CHECK(h.edges()[0].multiplicity == 3);

    // hand-aggregated fixture
    MultiHypergraph expected(6, Uniformity::Four);
    expected.add_edge({0, 1, 2, 3}, 3);
    expected.add_edge({1, 2, 4, 5}, 1);
    CHECK(h == expected);
}

TEST_CASE("hypergraph round trip and mixed uniformity") {
    MultiHypergraph h(7, Uniformity::Mixed);
    h.add_edge({4, 2, 0});
    h.add_edge({0, 1, 2, 3}, 2);
    std::string text = hypergraph_to_string(h);
    std::istringstream in(text);
    MultiHypergraph parsed = read_hypergraph(in);
    CHECK(parsed == h);
    CHECK(hypergraph_to_string(parsed) == text);
}

TEST_CASE("hypergraph header validation") {
    std::istringstream bad_r("5 2 0\n");
    CHECK_THROWS_AS(read_hypergraph(bad_r), ParseError);
    std::istringstream bad_count("5 3 2\n1 0 1 2\n");
    CHECK_THROWS_AS(read_hypergraph(bad_count), ParseError);
    std::istringstream bad_size("5 3 1\n1 0 1 2 3\n");
    CHECK_THROWS_AS(read_hypergraph(bad_size), ParseError);
}
