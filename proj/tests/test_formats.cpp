#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "skewopt/formats.hpp"

using namespace skewopt;

TEST_CASE("graph6 fixed encodings") {
    CHECK(to_graph6(complete_graph(6)) == "E~~w");
    CHECK(to_graph6(path_graph(2)) == "A_");
    CHECK(to_graph6(cycle_graph(4)) == "Cl");
    CHECK(from_graph6("E~~w") == complete_graph(6));
    CHECK(from_graph6(">>graph6<<E~~w\n") == complete_graph(6));
}

TEST_CASE("graph6 round-trips over random graphs") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 200; trial++) {
        int n = 1 + static_cast<int>(rng() % 20);
        auto g = testutil::random_graph(rng, n, 0.4);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(from_graph6(""), ParseError);
    CHECK_THROWS_AS(from_graph6("E~~"), ParseError);      // truncated
    CHECK_THROWS_AS(from_graph6("E~~w~"), ParseError);    // trailing bytes
    CHECK_THROWS_AS(from_graph6("E~\x01w"), ParseError);  // byte out of range
}

TEST_CASE("edge list round-trip and diagnostics") {
    auto g = u_graph(4);
    CHECK(from_edge_list(to_edge_list(g)) == g);
    CHECK(to_edge_list(path_graph(2)) == "2 1\n1 2\n");

    CHECK_THROWS_AS(from_edge_list("2 1\n1 3\n"), ParseError);  // endpoint out of range
    CHECK_THROWS_AS(from_edge_list("2 2\n1 2\n"), ParseError);  // too few edges
    CHECK_THROWS_AS(from_edge_list("2 1\n1 2\nstray"), ParseError);
    try {
        from_edge_list("3 2\n1 2\n9 1\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("sgf round-trip is byte identical on normalized content") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 100; trial++) {
        auto g = testutil::random_graph(rng, 1 + static_cast<int>(rng() % 14), 0.5);
        auto o = testutil::random_orientation(rng, g);
        std::string text = to_sgf(o);
        Orientation back = from_sgf(text);
        CHECK(to_sgf(back) == text);
        CHECK(skew_matrix(back) == skew_matrix(o));
    }
}

TEST_CASE("sgf accepts reversed edge order and explicit plus") {
    Orientation o = from_sgf("2 1 1\n2 1 +1\n");  // arc 2 -> 1
    CHECK(skew_matrix(o).at(1, 0) == 1);
    CHECK(skew_matrix(o).at(0, 1) == -1);
}

TEST_CASE("sgf rejects bad input with positions") {
    CHECK_THROWS_AS(from_sgf("2 1 1\n1 2 0\n"), ParseError);   // zero sign
    CHECK_THROWS_AS(from_sgf("2 1 1\n1 2 2\n"), ParseError);   // bad sign
    CHECK_THROWS_AS(from_sgf("2 1 1\n1 1 1\n"), ParseError);   // loop
    CHECK_THROWS_AS(from_sgf("2 1 1\n1 3 1\n"), ParseError);   // range
    CHECK_THROWS_AS(from_sgf("2 2 1\n1 2 1\n1 2 1\n"), ParseError);  // duplicate
    CHECK_THROWS_AS(from_sgf("2 1 1\n1 2 1\nx"), ParseError);  // trailing junk
    try {
        from_sgf("3 2 2\n1 2 1\n2 3 0\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("sgf header k is the maximum degree") {
    std::mt19937 rng(61);
    auto o = testutil::random_orientation(rng, u_graph(3));
    CHECK(sgf_header_k(to_sgf(o)) == 4);
}
