#include "doctest.h"

#include "cayring/build.hpp"
#include "cayring/graph.hpp"

using namespace cayring;

TEST_CASE("cayley graphs from the worked examples") {
    const RingTable z4 = make_cyclic_ring(4);
    const AdjacencyMatrix g4 = cayley_graph(z4, ElementSubset(4, {2}));
    CHECK(g4.at(0, 2));
    CHECK(g4.at(1, 3));
    CHECK_FALSE(g4.at(0, 1));
    CHECK(regular_degree(g4) == 1);
    CHECK(components(g4).size() == 2);

    const RingTable z6 = make_cyclic_ring(6);
    const AdjacencyMatrix g6 = cayley_graph(z6, ElementSubset(6, {1, 5}));
    CHECK(regular_degree(g6) == 2);
    CHECK(components(g6).size() == 1);
    for (int u = 0; u < 6; ++u) {
        CHECK(g6.at(u, (u + 1) % 6));
        CHECK(g6.at(u, (u + 5) % 6));
    }

    // S = {0} puts a loop on every vertex and nothing else.
    const RingTable z3 = make_cyclic_ring(3);
    const AdjacencyMatrix id3 = cayley_graph(z3, ElementSubset(3, {0}));
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v) CHECK(id3.at(u, v) == (u == v));

    // Asymmetric connection sets are rejected.
    CHECK_THROWS_AS(cayley_graph(z6, ElementSubset(6, {1})), Error);
}

TEST_CASE("regularity degenerate cases") {
    AdjacencyMatrix empty(3);
    CHECK(regular_degree(empty) == 0);

    AdjacencyMatrix path(3);
    path.set_edge(0, 1);
    path.set_edge(1, 2);
    CHECK_FALSE(regular_degree(path).has_value());
}

TEST_CASE("tensor products") {
    AdjacencyMatrix k2(2);
    k2.set_edge(0, 1);
    const AdjacencyMatrix t = tensor_product(k2, k2);
    // K_2 (x) K_2 is two disjoint edges: (0,0)-(1,1) and (0,1)-(1,0).
    CHECK(t.at(0, 3));
    CHECK(t.at(1, 2));
    CHECK_FALSE(t.at(0, 1));
    CHECK(components(t).size() == 2);

    // A (x) I_m is m disjoint copies of A's edge pattern.
    const RingTable z3 = make_cyclic_ring(3);
    const AdjacencyMatrix id3 = cayley_graph(z3, ElementSubset(3, {0}));
    const AdjacencyMatrix copies = tensor_product(k2, id3);
    for (int j = 0; j < 3; ++j) CHECK(copies.at(j, 3 + j));
    CHECK(components(copies).size() == 3);
}

TEST_CASE("tensor product matches the CRT isomorphism") {
    const RingTable z2 = make_cyclic_ring(2);
    const RingTable z3 = make_cyclic_ring(3);
    const RingTable z6 = make_cyclic_ring(6);
    const AdjacencyMatrix g2 = cayley_graph(z2, ElementSubset(2, {1}));
    const AdjacencyMatrix g3 = cayley_graph(z3, ElementSubset(3, {1, 2}));
    const AdjacencyMatrix t = tensor_product(g2, g3);
    const AdjacencyMatrix g6 = cayley_graph(z6, ElementSubset(6, {1, 5}));
    // u -> (u mod 2, u mod 3), tensor vertex index 3*(u mod 2) + (u mod 3).
    for (int u = 0; u < 6; ++u)
        for (int v = 0; v < 6; ++v)
            CHECK(g6.at(u, v) == t.at(3 * (u % 2) + u % 3, 3 * (v % 2) + v % 3));
}

TEST_CASE("components of coset graphs") {
    const RingTable z9 = make_cyclic_ring(9);
    const AdjacencyMatrix g = cayley_graph(z9, ElementSubset(9, {3, 6}));
    const auto comps = components(g);
    REQUIRE(comps.size() == 3);
    for (const auto& c : comps) {
        CHECK(c.size() == 3);
        // Each component is a triangle.
        CHECK(g.at(c[0], c[1]));
        CHECK(g.at(c[1], c[2]));
        CHECK(g.at(c[0], c[2]));
    }
}

TEST_CASE("complement") {
    const RingTable z4 = make_cyclic_ring(4);
    const AdjacencyMatrix g = cayley_graph(z4, ElementSubset(4, {2}));
    const AdjacencyMatrix c = complement(g);
    // Complement of two disjoint edges is the 4-cycle 0-1-2-3-0.
    CHECK(c.at(0, 1));
    CHECK(c.at(1, 2));
    CHECK(c.at(2, 3));
    CHECK(c.at(0, 3));
    CHECK_FALSE(c.at(0, 2));
    CHECK_FALSE(c.at(1, 3));

    CHECK(complement(c) == g);

    AdjacencyMatrix k4(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4.set_edge(u, v);
    CHECK(regular_degree(complement(k4)) == 0);

    const RingTable z3 = make_cyclic_ring(3);
    CHECK_THROWS_AS(complement(cayley_graph(z3, ElementSubset(3, {0}))), Error);
}

TEST_CASE("multipartite structure of local Cayley graphs") {
    const RingTable z9 = make_cyclic_ring(9);
    CHECK(multipartite_check(z9, build_context(z9, 3)).passed());

    const RingTable z8 = make_cyclic_ring(8);
    const GeneratorContext c8 = build_context(z8, 2);
    const MultipartiteReport rep = multipartite_check(z8, c8);
    CHECK(rep.passed());
    // Components are K_{2,2} on cosets of M_x = {0,4}.
    const AdjacencyMatrix g = cayley_graph(z8, c8.xRstar);
    CHECK(g.at(0, 2));
    CHECK(g.at(0, 6));
    CHECK_FALSE(g.at(0, 4));

    const RingTable z4 = make_cyclic_ring(4);
    CHECK(multipartite_check(z4, build_context(z4, 1)).passed());

    const RingTable z6 = make_cyclic_ring(6);
    CHECK_THROWS_AS(multipartite_check(z6, build_context(z6, 1)), Error);
}
