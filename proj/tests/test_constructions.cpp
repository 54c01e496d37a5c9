#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "skewopt/canonical.hpp"
#include "skewopt/constructions.hpp"
#include "skewopt/formats.hpp"

using namespace skewopt;

namespace {

void check_fixed(FixedMatrix which, int n) {
    Orientation o = fixed_orientation(which);
    CHECK(o.graph.n == n);
    CHECK(is_regular(o.graph, 5));
    CHECK(is_connected(o.graph));
    CHECK(even_neighborhood_check(o.graph).empty());
    GramReport rep = gram(o, 5);
    CHECK(rep.is_optimum);
    CHECK(rep.gram == 5 * IntMat::identity(n));
    CHECK(skew_energy(o) == doctest::Approx(n * std::sqrt(5.0)).epsilon(1e-10));
}

}  // namespace

TEST_CASE("fixed matrices verify exactly") {
    check_fixed(FixedMatrix::G4, 8);
    check_fixed(FixedMatrix::G16, 12);
    check_fixed(FixedMatrix::G17, 12);
    check_fixed(FixedMatrix::G31, 24);
}

TEST_CASE("fixed matrices reconstruct from their own support") {
    for (FixedMatrix which :
         {FixedMatrix::G4, FixedMatrix::G16, FixedMatrix::G17, FixedMatrix::G31}) {
        IntMat s = skew_matrix(fixed_orientation(which));
        CHECK(skew_matrix(orientation_from_matrix(s)) == s);
    }
}

TEST_CASE("G16/G17 row permutations restore the original vertex labels") {
    // v_1 of G16 is adjacent to v_2..v_6; in the published row order it is
    // the all-plus row. After relabeling, index 0 must see 1..5.
    Orientation g16 = fixed_orientation(FixedMatrix::G16);
    CHECK(g16.graph.adj[0] == 0b111110);
    for (int v = 1; v <= 5; v++) CHECK(skew_matrix(g16).at(0, v) == 1);

    // v_12 of G16 is the other all-plus row: adjacent to v_7..v_11.
    CHECK(g16.graph.adj[11] == 0b11111000000);

    Orientation g17 = fixed_orientation(FixedMatrix::G17);
    CHECK(g17.graph.n == 12);
}

TEST_CASE("sgf serializations of the fixed matrices are pinned") {
    auto hash = [](FixedMatrix w) { return testutil::sha256_hex(to_sgf(fixed_orientation(w))); };
    CHECK(hash(FixedMatrix::G4) ==
          "71c4cc054e8e2208a2c727431c99316acf18bcaa5e35aaae4b20eaf3a5dc2d77");
    CHECK(hash(FixedMatrix::G16) ==
          "e6da6c1ca5aaef9be77f55f5ae1e08a7c4fd78e2a8b422859d3dfbb0e18bd096");
    CHECK(hash(FixedMatrix::G17) ==
          "7d517c042b8cfd76fad47ef05287dd9f8ebed1a2cd98de1bd160adae19b6e924");
    CHECK(hash(FixedMatrix::G31) ==
          "a839bb52d5aea18e2c7611cba44d67249d2a906192444ebf229a761e730bb3fe");
}

TEST_CASE("block identities hold exactly") {
    auto ids = block_identities();
    CHECK(ids.size() >= 30);
    for (const auto& id : ids) {
        INFO(id.name);
        CHECK(id.ok);
    }
}

TEST_CASE("g12 family verifies for both terminator parities") {
    for (int n : {12, 16, 20, 24, 28, 32}) {
        Orientation o = g12_family(n);
        CHECK(o.graph.n == n);
        CHECK(is_regular(o.graph, 5));
        CHECK(is_connected(o.graph));
        CHECK(even_neighborhood_check(o.graph).empty());
        CHECK(gram(o, 5).gram == 5 * IntMat::identity(n));
    }
    CHECK_THROWS_AS(g12_family(8), Error);
    CHECK_THROWS_AS(g12_family(14), Error);
}

TEST_CASE("g26 family verifies") {
    for (int n : {16, 20, 24, 28, 32}) {
        Orientation o = g26_family(n);
        CHECK(o.graph.n == n);
        CHECK(is_regular(o.graph, 5));
        CHECK(is_connected(o.graph));
        CHECK(even_neighborhood_check(o.graph).empty());
        CHECK(gram(o, 5).gram == 5 * IntMat::identity(n));
    }
    CHECK_THROWS_AS(g26_family(12), Error);
    CHECK_THROWS_AS(g26_family(18), Error);
}

TEST_CASE("g12 and g16 supports are not isomorphic to g26 at n = 16") {
    // sanity: the two parametric families genuinely differ
    CHECK_FALSE(isomorphic(g12_family(16).graph, g26_family(16).graph));
}

TEST_CASE("p2 lift: block identity on the smallest case, then the chain") {
    // [[S, I], [-I, -S]] with S = [[0,1],[-1,0]] must square to -2I
    Orientation k2 = orient_forward(path_graph(2));
    Orientation c4 = p2_lift(k2);
    CHECK(c4.graph == cartesian_product(path_graph(2), path_graph(2)));
    CHECK(gram(c4, 2).gram == 2 * IntMat::identity(4));

    Orientation q = c4;
    int k = 2;
    while (k < 5) {
        q = p2_lift(q);
        k++;
        CHECK(q.graph.n == (1 << k));
        CHECK(gram(q, k).gram == k * IntMat::identity(1 << k));
        CHECK(q.graph == cartesian_product(path_graph(2), hypercube(k - 1)));
    }
    CHECK(isomorphic(q.graph, hypercube(5)));
}

TEST_CASE("p2 lift rejects non-optimum input") {
    Orientation c3 = orient_forward(cycle_graph(3));
    CHECK_THROWS_AS(p2_lift(c3), Error);
    Orientation p3 = orient_forward(path_graph(3));
    CHECK_THROWS_AS(p2_lift(p3), Error);  // not regular
}

TEST_CASE("hypercube orientation") {
    for (int d = 1; d <= 5; d++) {
        Orientation o = hypercube_orientation(d);
        CHECK(o.graph.n == (1 << d));
        CHECK(gram(o, d).is_optimum);
        CHECK(isomorphic(o.graph, hypercube(d)));
    }
}
