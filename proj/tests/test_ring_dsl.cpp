#include "doctest.h"

#include "cayring/dsl.hpp"

using namespace cayring;

TEST_CASE("parse_ring grammar") {
    const RingExpr e1 = parse_ring("Z4 x GF(9)");
    REQUIRE(e1.atoms.size() == 2);
    CHECK(std::get<ZnAtom>(e1.atoms[0]).n == 4);
    CHECK(std::get<GFAtom>(e1.atoms[1]).p == 3);
    CHECK(std::get<GFAtom>(e1.atoms[1]).k == 2);
    CHECK(e1.to_string() == "Z4 x GF(9)");

    const RingExpr e2 = parse_ring("Z2 x Z2 x Z3");
    CHECK(e2.atoms.size() == 3);

    const RingExpr e3 = parse_ring("  GF( 2 ^ 4 ) ");
    CHECK(std::get<GFAtom>(e3.atoms[0]).k == 4);
    CHECK(e3.to_string() == "GF(16)");

    const RingExpr e4 = parse_ring("A4 x G9 x K4");
    CHECK(std::get<PresentedAtom>(e4.atoms[0]).kind == RingClass::A);
    CHECK(std::get<PresentedAtom>(e4.atoms[1]).kind == RingClass::G);
    CHECK(std::get<PresentedAtom>(e4.atoms[2]).kind == RingClass::K);
}

TEST_CASE("parse_ring rejects non-unital factors") {
    CHECK_THROWS_AS(parse_ring("C3(0)"), ParseError);
    CHECK_THROWS_AS(parse_ring("B4"), ParseError);
    CHECK_THROWS_AS(parse_ring("Z2 x H9"), ParseError);
    CHECK_THROWS_AS(parse_ring("I4 x Z3"), ParseError);
    CHECK_THROWS_AS(parse_ring("J9"), ParseError);
    try {
        parse_ring("Z2 x C3(0)");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 5);
        CHECK(std::string(e.what()).find("unity") != std::string::npos);
    }
}

TEST_CASE("parse_ring syntax errors carry offsets") {
    CHECK_THROWS_AS(parse_ring(""), ParseError);
    CHECK_THROWS_AS(parse_ring("Z"), ParseError);
    CHECK_THROWS_AS(parse_ring("Z1"), ParseError);
    CHECK_THROWS_AS(parse_ring("Z6 y Z2"), ParseError);
    CHECK_THROWS_AS(parse_ring("GF(6)"), ParseError);
    CHECK_THROWS_AS(parse_ring("GF(4"), ParseError);
    CHECK_THROWS_AS(parse_ring("Q8"), ParseError);
    CHECK_THROWS_AS(parse_ring("A6"), ParseError);
    CHECK_THROWS_AS(parse_ring("Z4 x"), ParseError);
    try {
        parse_ring("Z6 y Z2");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 3);
    }
}

TEST_CASE("parse_element basic forms") {
    const BuiltRing r1 = build_ring("Z4 x GF(4)");
    // (2, t+1): coordinates 2 and t+1 (index 3) -> 2*4 + 3.
    CHECK(parse_element("(2, t+1)", r1) == 11);
    CHECK(parse_element("(0,0)", r1) == 0);

    const BuiltRing z8 = build_ring("Z8");
    CHECK(parse_element("5", z8) == 5);
    CHECK(parse_element("(5)", z8) == 5);

    const BuiltRing r2 = build_ring("Z2 x Z3");
    CHECK(parse_element("(1, 0)", r2) == 3);
    CHECK(parse_element("(1,2)", r2) == 5);

    const BuiltRing g4 = build_ring("G4");
    CHECK(parse_element("1,0", g4) == 2);
    CHECK(parse_element("(1,1)", g4) == 3);

    const BuiltRing mix = build_ring("Z2 x G4");
    CHECK(parse_element("(1, 1,0)", mix) == 1 * 4 + 2);
}

TEST_CASE("parse_element errors") {
    const BuiltRing r = build_ring("Z2 x Z3");
    CHECK_THROWS_AS(parse_element("(1)", r), ParseError);        // arity mismatch
    CHECK_THROWS_AS(parse_element("(1, 3)", r), ParseError);     // out of range
    CHECK_THROWS_AS(parse_element("(1, 2, 0)", r), ParseError);  // too many
    CHECK_THROWS_AS(parse_element("", r), ParseError);
    CHECK_THROWS_AS(parse_element("(1, x)", r), ParseError);

    const BuiltRing gf = build_ring("GF(9)");
    CHECK_THROWS_AS(parse_element("t+", gf), ParseError);
    CHECK_THROWS_AS(parse_element("t^", gf), ParseError);
}

TEST_CASE("field coordinates evaluate as polynomials") {
    const BuiltRing gf9 = build_ring("GF(9)");
    // In GF(9) with t^2 = 2, "t^2" evaluates to the constant 2.
    CHECK(parse_element("t^2", gf9) == 2);
    CHECK(parse_element("2t+1", gf9) == parse_element("t+t+1", gf9));
    // Coefficients reduce mod 3.
    CHECK(parse_element("4t", gf9) == parse_element("t", gf9));
}

TEST_CASE("round trips over family rings") {
    for (const char* spec : {"Z2", "Z12", "Z36", "GF(4)", "GF(9)", "A9", "G4",
                             "Z4 x GF(9)", "Z2 x G4 x Z3", "K4 x Z9", "Z8 x Z8"}) {
        const BuiltRing r = build_ring(spec);
        const RingExpr reparsed = parse_ring(r.expr.to_string());
        CHECK(reparsed.to_string() == r.expr.to_string());
        for (Elem e = 0; e < r.ring.order(); ++e) {
            INFO(spec, " element ", e, " label ", r.ring.label(e));
            CHECK(parse_element(format_element(r, e), r) == e);
        }
    }
}
