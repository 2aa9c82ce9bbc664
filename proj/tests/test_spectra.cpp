#include "doctest.h"

#include "cayring/build.hpp"
#include "cayring/spectrum.hpp"

using namespace cayring;

namespace {

SpectrumMultiset make_spec(std::initializer_list<std::pair<long long, long long>> entries) {
    SpectrumMultiset s;
    for (const auto& [l, m] : entries) s.add(l, m);
    return s;
}

} // namespace

TEST_CASE("oracle on known matrices") {
    AdjacencyMatrix id5(5, true);
    for (int i = 0; i < 5; ++i) id5.set_edge(i, i);
    CHECK(oracle_spectrum(id5) == make_spec({{1, 5}}));

    AdjacencyMatrix k4(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4.set_edge(u, v);
    CHECK(oracle_spectrum(k4) == make_spec({{3, 1}, {-1, 3}}));

    AdjacencyMatrix c6(6);
    for (int u = 0; u < 6; ++u) c6.set_edge(u, (u + 1) % 6);
    CHECK(oracle_spectrum(c6) == make_spec({{2, 1}, {1, 2}, {-1, 2}, {-2, 1}}));

    // Petersen graph: integral spectrum with high multiplicities.
    AdjacencyMatrix petersen(10);
    for (int i = 0; i < 5; ++i) {
        petersen.set_edge(i, (i + 1) % 5);
        petersen.set_edge(i, 5 + i);
        petersen.set_edge(5 + i, 5 + (i + 2) % 5);
    }
    CHECK(oracle_spectrum(petersen) == make_spec({{3, 1}, {1, 5}, {-2, 4}}));
}

TEST_CASE("oracle flags genuinely non-integral spectra") {
    AdjacencyMatrix p3(3); // path; eigenvalues 0, +-sqrt(2)
    p3.set_edge(0, 1);
    p3.set_edge(1, 2);
    CHECK_THROWS_AS(oracle_spectrum(p3), Error);
}

TEST_CASE("closed-form local spectra") {
    const RingTable z9 = make_cyclic_ring(9);
    CHECK(closed_form_spectrum_local(z9, build_context(z9, 3)) == make_spec({{2, 3}, {-1, 6}}));

    const RingTable z4 = make_cyclic_ring(4);
    CHECK(closed_form_spectrum_local(z4, build_context(z4, 2)) == make_spec({{1, 2}, {-1, 2}}));

    const RingTable z8 = make_cyclic_ring(8);
    CHECK(closed_form_spectrum_local(z8, build_context(z8, 2)) ==
          make_spec({{2, 2}, {-2, 2}, {0, 4}}));

    const RingTable z6 = make_cyclic_ring(6);
    CHECK_THROWS_AS(closed_form_spectrum_local(z6, build_context(z6, 1)), Error);
}

TEST_CASE("closed-form general spectra") {
    const RingTable z6 = make_cyclic_ring(6);
    CHECK(closed_form_spectrum(z6, 1) == make_spec({{2, 1}, {1, 2}, {-1, 2}, {-2, 1}}));

    const RingTable z3 = make_cyclic_ring(3);
    const RingTable z27 = make_product({z3, z3, z3});
    const Elem all_ones = local_factorization(z27).element_of({1, 1, 1});
    CHECK(closed_form_spectrum(z27, all_ones) ==
          make_spec({{8, 1}, {-4, 6}, {2, 12}, {-1, 8}}));

    const RingTable z4 = make_cyclic_ring(4);
    CHECK(closed_form_spectrum(z4, 2) == make_spec({{1, 2}, {-1, 2}}));
}

TEST_CASE("closed form agrees with the oracle across small rings") {
    for (int n = 2; n <= 24; ++n) {
        const RingTable r = make_cyclic_ring(n);
        const LocalFactorization fact = local_factorization(r);
        for (Elem x = 1; x < n; ++x) {
            const GeneratorContext ctx = build_context(r, x);
            const SpectrumMultiset closed = closed_form_spectrum(r, fact, x);
            const SpectrumMultiset oracle = oracle_spectrum(cayley_graph(r, ctx.xRstar));
            INFO("Z", n, " x=", x);
            CHECK(closed == oracle);
            CHECK(closed.total_multiplicity() == n);
            CHECK(closed.trace() == 0);
            CHECK(closed.second_moment() == static_cast<long long>(n) * ctx.xRstar.size());
        }
    }
}

TEST_CASE("complement spectrum") {
    CHECK(complement_spectrum(make_spec({{1, 2}, {-1, 2}}), 4, 1) ==
          make_spec({{2, 1}, {0, 2}, {-2, 1}}));

    // Complement of K_n is empty.
    CHECK(complement_spectrum(make_spec({{4, 1}, {-1, 4}}), 5, 4) == make_spec({{0, 5}}));

    CHECK(complement_spectrum(make_spec({{2, 1}, {1, 2}, {-1, 2}, {-2, 1}}), 6, 2) ==
          make_spec({{3, 1}, {-2, 2}, {0, 2}, {1, 1}}));

    CHECK_THROWS_AS(complement_spectrum(make_spec({{1, 2}}), 2, 3), Error);
}

TEST_CASE("energies") {
    const RingTable z6 = make_cyclic_ring(6);
    CHECK(energy_closed_form(z6, 1) == 8);

    const RingTable z4 = make_cyclic_ring(4);
    CHECK(energy_closed_form(z4, 2) == 4);

    const RingTable z9 = make_cyclic_ring(9);
    CHECK(energy_closed_form(z9, 3) == 12);

    CHECK(energy_from_spectrum(make_spec({{2, 1}, {1, 2}, {-1, 2}, {-2, 1}})) == 8);
    CHECK(energy_from_spectrum(make_spec({{0, 7}})) == 0);
    CHECK(energy_from_spectrum(make_spec({{3, 1}, {-2, 2}, {0, 2}, {1, 1}})) == 8);
}

TEST_CASE("complement energies") {
    const RingTable z4 = make_cyclic_ring(4);
    CHECK(complement_energy_closed_form(z4, 2) == 4);

    const RingTable z6 = make_cyclic_ring(6);
    CHECK(complement_energy_closed_form(z6, 1) == 8);

    const RingTable z2 = make_cyclic_ring(2);
    CHECK(complement_energy_closed_form(z2, 1) == 0);
}

TEST_CASE("complement identities against the oracle") {
    for (int n : {4, 6, 8, 9, 10, 12, 15, 16}) {
        const RingTable r = make_cyclic_ring(n);
        const LocalFactorization fact = local_factorization(r);
        for (Elem x = 1; x < n; ++x) {
            const GeneratorContext ctx = build_context(r, x);
            const SpectrumMultiset closed = closed_form_spectrum(r, fact, x);
            const SpectrumMultiset bar =
                complement_spectrum(closed, n, ctx.xRstar.size());
            const AdjacencyMatrix g = cayley_graph(r, ctx.xRstar);
            const SpectrumMultiset oracle_bar = oracle_spectrum(complement(g));
            INFO("Z", n, " x=", x);
            CHECK(bar == oracle_bar);
            CHECK(complement_energy_closed_form(r, fact, x) == bar.energy());
        }
    }
}

TEST_CASE("energy multiplies across tensor products") {
    const RingTable z4 = make_cyclic_ring(4);
    const RingTable z9 = make_cyclic_ring(9);
    const RingTable f4 = make_galois_field(2, 2);

    struct Pair {
        const RingTable& a;
        Elem xa;
        const RingTable& b;
        Elem xb;
    };
    const Pair pairs[] = {{z4, 1, z9, 1}, {z4, 2, z9, 3}, {f4, 2, z9, 6}, {z4, 3, f4, 1}};
    for (const auto& p : pairs) {
        const AdjacencyMatrix ga = cayley_graph(p.a, build_context(p.a, p.xa).xRstar);
        const AdjacencyMatrix gb = cayley_graph(p.b, build_context(p.b, p.xb).xRstar);
        const long long ea = oracle_spectrum(ga).energy();
        const long long eb = oracle_spectrum(gb).energy();
        CHECK(oracle_spectrum(tensor_product(ga, gb)).energy() == ea * eb);
    }
}

TEST_CASE("spectrum multiset bookkeeping") {
    SpectrumMultiset s;
    s.add(3, 1);
    s.add(-1, 3);
    s.add(3, 2);
    s.add(0, 0); // ignored
    CHECK(s.multiplicity(3) == 3);
    CHECK(s.total_multiplicity() == 6);
    CHECK(s.to_string() == "{3:3, -1:3}");
    CHECK_THROWS_AS(s.add(1, -2), Error);
}
