#include "doctest.h"

#include "cayring/build.hpp"
#include "cayring/ideal.hpp"

using namespace cayring;

TEST_CASE("build_context on Z_8, x = 2") {
    const RingTable z8 = make_cyclic_ring(8);
    const GeneratorContext ctx = build_context(z8, 2);
    CHECK(ctx.xRstar.items() == std::vector<Elem>{2, 6});
    CHECK(ctx.Ix.items() == std::vector<Elem>{0, 2, 4, 6});
    CHECK(ctx.Mx.items() == std::vector<Elem>{0, 4});
    CHECK(ctx.Ax.items() == std::vector<Elem>{0, 4});
}

TEST_CASE("build_context on Z_6, x = 1") {
    const RingTable z6 = make_cyclic_ring(6);
    const GeneratorContext ctx = build_context(z6, 1);
    CHECK(ctx.xRstar.items() == std::vector<Elem>{1, 5});
    CHECK(ctx.Ix.size() == 6);
    CHECK(ctx.Mx.items() == std::vector<Elem>{0, 2, 3, 4});
}

TEST_CASE("build_context with a unit generator") {
    // For x a unit, I_x = R; over a local ring M_x is the non-unit set.
    for (int n : {4, 8, 9, 25, 27}) {
        const RingTable r = make_cyclic_ring(n);
        const GeneratorContext ctx = build_context(r, *r.unity());
        CHECK(ctx.Ix.size() == n);
        auto m = local_maximal_ideal(r);
        REQUIRE(m.has_value());
        CHECK(ctx.Mx == *m);
    }
}

TEST_CASE("build_context preconditions") {
    const RingTable z6 = make_cyclic_ring(6);
    CHECK_THROWS_AS(build_context(z6, 0), Error);
    CHECK_THROWS_AS(build_context(make_null_ring(3), 1), Error);
}

TEST_CASE("connection sets are symmetric") {
    for (int n : {4, 6, 8, 9, 12, 16, 27}) {
        const RingTable r = make_cyclic_ring(n);
        for (Elem x = 1; x < n; ++x) {
            const GeneratorContext ctx = build_context(r, x);
            for (Elem s : ctx.xRstar) CHECK(ctx.xRstar.contains(r.neg(s)));
            CHECK(ctx.Ix.size() == ctx.Mx.size() + ctx.xRstar.size());
        }
    }
}

TEST_CASE("lemma suite on the worked examples") {
    const RingTable z8 = make_cyclic_ring(8);
    const GeneratorContext c8 = build_context(z8, 2);
    const LemmaReport r8 = lemma_suite(z8, c8);
    CHECK(r8.all_passed());
    CHECK(c8.Ix.size() * 4 == 8 * c8.Mx.size()); // |I_x|/|M_x| = |R|/|M| = 2

    const RingTable z9 = make_cyclic_ring(9);
    const GeneratorContext c9 = build_context(z9, 3);
    CHECK(c9.Mx.items() == std::vector<Elem>{0});
    const LemmaReport r9 = lemma_suite(z9, c9);
    CHECK(r9.all_passed());
    // The non-unit branch identified I_x as a null ring of prime order.
    bool saw_null_check = false;
    for (const auto& c : r9.checks)
        if (c.name == "nonunit_generator_null") {
            CHECK(c.status == CheckStatus::Pass);
            saw_null_check = true;
        }
    CHECK(saw_null_check);

    const RingTable z4 = make_cyclic_ring(4);
    const GeneratorContext c4 = build_context(z4, 1);
    CHECK(c4.Mx.items() == std::vector<Elem>{0, 2});
    CHECK(lemma_suite(z4, c4).all_passed());
}

TEST_CASE("lemma suite rejects non-local rings") {
    const RingTable z6 = make_cyclic_ring(6);
    const GeneratorContext ctx = build_context(z6, 1);
    CHECK_THROWS_AS(lemma_suite(z6, ctx), Error);
}

TEST_CASE("lemma suite sweeps every local ring in reach") {
    std::vector<RingTable> locals;
    for (int n : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32}) locals.push_back(make_cyclic_ring(n));
    locals.push_back(make_galois_field(2, 2));
    locals.push_back(make_galois_field(3, 2));
    locals.push_back(make_galois_field(2, 3));
    locals.push_back(make_presented_p2(RingClass::G, 2));
    locals.push_back(make_presented_p2(RingClass::G, 3));
    for (const RingTable& r : locals) {
        REQUIRE(is_local(r));
        for (Elem x = 0; x < r.order(); ++x) {
            if (x == r.zero()) continue;
            const GeneratorContext ctx = build_context(r, x);
            const LemmaReport rep = lemma_suite(r, ctx);
            INFO("order ", r.order(), " x ", x, "\n", rep.summary());
            CHECK(rep.all_passed());
        }
    }
}

TEST_CASE("coordinate profiles skip zero coordinates") {
    const RingTable prod = make_product({make_cyclic_ring(2), make_cyclic_ring(3)});
    const LocalFactorization fact = local_factorization(prod);
    // x = (1, 0): the Z_3 coordinate is zero and is skipped.
    const Elem x = fact.element_of({1, 0});
    const auto profiles = coordinate_profiles(prod, fact, x);
    REQUIRE(profiles.size() == 1);
    CHECK(profiles[0].I_size == 2);
    CHECK(profiles[0].M_size == 1);
    CHECK(profiles[0].unit);
}
