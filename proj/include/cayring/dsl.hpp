#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cayring/build.hpp"
#include "cayring/ring.hpp"

namespace cayring {

// Ring expression atoms. The DSL only builds rings with unity, so the
// non-unital atoms (C_p(0) and the presented kinds B, C, H, I, J) parse but
// are rejected as factors.
struct ZnAtom { int n = 0; };
struct GFAtom { int p = 0; int k = 1; };
struct NullAtom { int p = 0; };
struct PresentedAtom { RingClass kind = RingClass::A; int p = 0; };

using RingAtom = std::variant<ZnAtom, GFAtom, NullAtom, PresentedAtom>;

int atom_order(const RingAtom& atom);
int atom_arity(const RingAtom& atom); // coordinate tokens consumed by the atom
bool atom_unital(const RingAtom& atom);
std::string atom_to_string(const RingAtom& atom);
RingTable build_atom(const RingAtom& atom);

struct RingExpr {
    std::vector<RingAtom> atoms;

    std::string to_string() const; // canonical rendering, reparses to the same expr
};

/// Grammar: expr := atom ("x" atom)*;
///          atom := "Z" int | "GF(" int ["^" int] ")" | "C" int "(0)"
///                | kind int   with kind in {A,B,C,D,G,H,I,J,K}, int = p^2.
/// Whitespace-insensitive; kind letters are case-sensitive. Throws
/// ParseError with a byte offset on syntax errors, invalid parameters, and
/// non-unital atoms.
RingExpr parse_ring(std::string_view text);

/// A ring together with the expression it was built from; keeps the factor
/// tables so element coordinates can be decoded.
struct BuiltRing {
    RingExpr expr;
    std::vector<RingTable> atom_rings;
    std::vector<int> atom_orders;
    RingTable ring;
};

BuiltRing build_ring(const RingExpr& expr);
BuiltRing build_ring(std::string_view text);

/// Element syntax "(c_1, ..., c_s)" with per-atom coordinates: integers for
/// Z_n and the presented rings ("m", or "m,n" for the two-generator kinds)
/// and polynomial strings like "t+1" for Galois fields. A single coordinate
/// may omit the parentheses.
Elem parse_element(std::string_view text, const BuiltRing& ring);

/// Canonical element rendering; parse_element inverts it.
std::string format_element(const BuiltRing& ring, Elem e);

} // namespace cayring
