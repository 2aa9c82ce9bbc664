#include "cayring/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cayring {

namespace {

struct Scanner {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    char take() {
        skip_ws();
        return text[pos++];
    }
    void expect(char c, const char* what) {
        skip_ws();
        if (pos >= text.size() || text[pos] != c)
            throw ParseError(std::string("expected ") + what, pos);
        ++pos;
    }
    int integer(const char* what) {
        skip_ws();
        const std::size_t start = pos;
        long long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1'000'000'000LL) throw ParseError("integer too large", start);
            ++pos;
        }
        if (pos == start) throw ParseError(std::string("expected ") + what, pos);
        return static_cast<int>(v);
    }
};

// q = p^k for a prime p and 1 <= k <= 4, or nothing.
bool prime_power(int q, int& p, int& k) {
    if (q < 2) return false;
    int base = 2;
    while (base * base <= q) {
        if (q % base == 0) {
            int v = q, e = 0;
            while (v % base == 0) { v /= base; ++e; }
            if (v != 1 || e > 4) return false;
            p = base;
            k = e;
            return true;
        }
        ++base;
    }
    p = q;
    k = 1;
    return true;
}

RingAtom parse_atom(Scanner& sc) {
    sc.skip_ws();
    const std::size_t at = sc.pos;
    const char c = sc.peek();

    if (c == 'Z') {
        sc.take();
        const int n = sc.integer("ring order after Z");
        if (n < 2) throw ParseError("Z_n requires n >= 2", at);
        if (n > max_ring_order()) throw ParseError("ring order exceeds cap", at);
        return ZnAtom{n};
    }

    if (c == 'G' && sc.pos + 1 < sc.text.size() && sc.text[sc.pos + 1] == 'F') {
        sc.take();
        sc.take();
        sc.expect('(', "'(' after GF");
        const int first = sc.integer("field order");
        int p = 0, k = 0;
        if (sc.peek() == '^') {
            sc.take();
            const int e = sc.integer("field exponent");
            if (!is_prime(first)) throw ParseError("GF base must be prime", at);
            if (e < 1 || e > 4) throw ParseError("GF exponent must be in 1..4", at);
            p = first;
            k = e;
        } else if (!prime_power(first, p, k)) {
            throw ParseError("GF order must be a prime power p^k with k <= 4", at);
        }
        sc.expect(')', "')' closing GF");
        long long order = 1;
        for (int i = 0; i < k; ++i) order *= p;
        if (order > max_ring_order()) throw ParseError("field order exceeds cap", at);
        return GFAtom{p, k};
    }

    if (c == 'C') {
        sc.take();
        const int n = sc.integer("parameter after C");
        if (sc.peek() == '(') {
            sc.take();
            sc.expect('0', "'0' in C_p(0)");
            sc.expect(')', "')' closing C_p(0)");
            if (!is_prime(n)) throw ParseError("C_p(0) requires a prime p", at);
            return NullAtom{n};
        }
        // Otherwise the letter names the presented kind C.
        int p = 0, k = 0;
        if (!prime_power(n, p, k) || k != 2)
            throw ParseError("presented ring parameter must be p^2 for a prime p", at);
        return PresentedAtom{RingClass::C, p};
    }

    static const std::string kinds = "ABDGHIJK";
    if (kinds.find(c) != std::string::npos) {
        sc.take();
        const int n = sc.integer("parameter after kind letter");
        int p = 0, k = 0;
        if (!prime_power(n, p, k) || k != 2)
            throw ParseError("presented ring parameter must be p^2 for a prime p", at);
        static const RingClass classes[] = {RingClass::A, RingClass::B, RingClass::D,
                                            RingClass::G, RingClass::H, RingClass::I,
                                            RingClass::J, RingClass::K};
        return PresentedAtom{classes[kinds.find(c)], p};
    }

    throw ParseError("expected a ring atom (Z, GF, C, or a kind letter)", at);
}

} // namespace

int atom_order(const RingAtom& atom) {
    return std::visit(
        [](const auto& a) -> int {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, ZnAtom>) return a.n;
            else if constexpr (std::is_same_v<T, GFAtom>) {
                int o = 1;
                for (int i = 0; i < a.k; ++i) o *= a.p;
                return o;
            } else if constexpr (std::is_same_v<T, NullAtom>) return a.p;
            else return a.p * a.p;
        },
        atom);
}

int atom_arity(const RingAtom& atom) {
    if (const auto* p = std::get_if<PresentedAtom>(&atom)) {
        switch (p->kind) {
            case RingClass::D:
            case RingClass::G:
            case RingClass::H:
            case RingClass::I:
            case RingClass::J:
                return 2;
            default:
                return 1;
        }
    }
    return 1;
}

bool atom_unital(const RingAtom& atom) {
    if (std::holds_alternative<NullAtom>(atom)) return false;
    if (const auto* p = std::get_if<PresentedAtom>(&atom)) {
        switch (p->kind) {
            case RingClass::B:
            case RingClass::C:
            case RingClass::H:
            case RingClass::I:
            case RingClass::J:
                return false;
            default:
                return true;
        }
    }
    return true;
}

std::string atom_to_string(const RingAtom& atom) {
    return std::visit(
        [&](const auto& a) -> std::string {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, ZnAtom>) return "Z" + std::to_string(a.n);
            else if constexpr (std::is_same_v<T, GFAtom>)
                return "GF(" + std::to_string(atom_order(atom)) + ")";
            else if constexpr (std::is_same_v<T, NullAtom>)
                return "C" + std::to_string(a.p) + "(0)";
            else
                return RingClassLabel{a.kind, a.p * a.p}.to_string();
        },
        atom);
}

RingTable build_atom(const RingAtom& atom) {
    return std::visit(
        [](const auto& a) -> RingTable {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, ZnAtom>) return make_cyclic_ring(a.n);
            else if constexpr (std::is_same_v<T, GFAtom>) return make_galois_field(a.p, a.k);
            else if constexpr (std::is_same_v<T, NullAtom>) return make_null_ring(a.p);
            else return make_presented_p2(a.kind, a.p);
        },
        atom);
}

std::string RingExpr::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (i) out << " x ";
        out << atom_to_string(atoms[i]);
    }
    return out.str();
}

RingExpr parse_ring(std::string_view text) {
    Scanner sc{text};
    RingExpr expr;
    while (true) {
        sc.skip_ws();
        const std::size_t at = sc.pos;
        RingAtom atom = parse_atom(sc);
        if (!atom_unital(atom))
            throw ParseError("non-unital factor " + atom_to_string(atom) +
                                 ": R must be a ring with unity",
                             at);
        expr.atoms.push_back(std::move(atom));
        if (sc.done()) break;
        const std::size_t sep = sc.pos;
        if (sc.take() != 'x') throw ParseError("expected 'x' between factors", sep);
    }
    long long order = 1;
    for (const RingAtom& a : expr.atoms) {
        order *= atom_order(a);
        if (order > max_ring_order())
            throw ParseError("product order exceeds cap " + std::to_string(max_ring_order()), 0);
    }
    return expr;
}

BuiltRing build_ring(const RingExpr& expr) {
    BuiltRing out;
    out.expr = expr;
    for (const RingAtom& a : expr.atoms) {
        out.atom_rings.push_back(build_atom(a));
        out.atom_orders.push_back(atom_order(a));
    }
    out.ring = make_product(out.atom_rings);
    return out;
}

BuiltRing build_ring(std::string_view text) { return build_ring(parse_ring(text)); }

namespace {

// Coordinate of a Galois-field atom: a polynomial in t, evaluated with the
// field tables. Coefficients reduce mod p; exponents may be any small value.
Elem eval_poly_coordinate(std::string_view token, const GFAtom& atom, const RingTable& field,
                          std::size_t base_offset) {
    const Elem t_elem = atom.k >= 2 ? atom.p : 0; // coefficient vector (0,1,...)
    Elem acc = field.zero();
    std::size_t i = 0;
    if (token.empty()) throw ParseError("empty field coordinate", base_offset);
    while (i < token.size()) {
        long long coeff = -1;
        std::size_t digits_at = i;
        if (std::isdigit(static_cast<unsigned char>(token[i]))) {
            coeff = 0;
            while (i < token.size() && std::isdigit(static_cast<unsigned char>(token[i]))) {
                coeff = coeff * 10 + (token[i] - '0');
                if (coeff > 1'000'000'000LL)
                    throw ParseError("coefficient too large", base_offset + digits_at);
                ++i;
            }
        }
        long long expo = 0;
        if (i < token.size() && token[i] == 't') {
            ++i;
            expo = 1;
            if (i < token.size() && token[i] == '^') {
                ++i;
                if (i >= token.size() || !std::isdigit(static_cast<unsigned char>(token[i])))
                    throw ParseError("expected exponent after '^'", base_offset + i);
                expo = 0;
                while (i < token.size() && std::isdigit(static_cast<unsigned char>(token[i]))) {
                    expo = expo * 10 + (token[i] - '0');
                    if (expo > 64) throw ParseError("exponent too large", base_offset + i);
                    ++i;
                }
            }
        } else if (coeff < 0) {
            throw ParseError("expected a coefficient or 't' in field coordinate",
                             base_offset + i);
        }
        if (coeff < 0) coeff = 1;
        Elem term = static_cast<Elem>(coeff % atom.p); // constants are indices 0..p-1
        for (long long e = 0; e < expo; ++e) term = field.mul(term, t_elem);
        acc = field.add(acc, term);
        if (i < token.size()) {
            if (token[i] != '+')
                throw ParseError("expected '+' between polynomial terms", base_offset + i);
            ++i;
            if (i >= token.size())
                throw ParseError("dangling '+' in field coordinate", base_offset + i);
        }
    }
    return acc;
}

int integer_coordinate(std::string_view token, int bound, std::size_t base_offset) {
    if (token.empty()) throw ParseError("empty coordinate", base_offset);
    long long v = 0;
    for (std::size_t i = 0; i < token.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(token[i])))
            throw ParseError("expected an integer coordinate", base_offset + i);
        v = v * 10 + (token[i] - '0');
        if (v > 1'000'000'000LL) throw ParseError("coordinate too large", base_offset);
    }
    if (v >= bound)
        throw ParseError("coordinate " + std::to_string(v) + " out of range (max " +
                             std::to_string(bound - 1) + ")",
                         base_offset);
    return static_cast<int>(v);
}

} // namespace

Elem parse_element(std::string_view text, const BuiltRing& ring) {
    // Whitespace never matters in element syntax.
    std::string compact;
    std::vector<std::size_t> origin; // offset into the original text per char
    for (std::size_t i = 0; i < text.size(); ++i)
        if (!std::isspace(static_cast<unsigned char>(text[i]))) {
            compact.push_back(text[i]);
            origin.push_back(i);
        }
    origin.push_back(text.size());
    if (compact.empty()) throw ParseError("empty element", 0);

    std::size_t begin = 0, end = compact.size();
    if (compact.front() == '(') {
        if (compact.back() != ')') throw ParseError("unbalanced parentheses", origin.back() - 1);
        begin = 1;
        end -= 1;
    }

    // Split into comma-separated tokens and distribute them over the atoms
    // by arity.
    std::vector<std::pair<std::string_view, std::size_t>> tokens;
    std::size_t token_start = begin;
    for (std::size_t i = begin; i <= end; ++i) {
        if (i == end || compact[i] == ',') {
            tokens.emplace_back(std::string_view(compact).substr(token_start, i - token_start),
                                origin[token_start]);
            token_start = i + 1;
        }
    }

    int total_arity = 0;
    for (const RingAtom& a : ring.expr.atoms) total_arity += atom_arity(a);
    if (static_cast<int>(tokens.size()) != total_arity)
        throw ParseError("element has " + std::to_string(tokens.size()) + " coordinates, ring needs " +
                             std::to_string(total_arity),
                         0);

    std::vector<Elem> coords;
    std::size_t t = 0;
    for (std::size_t i = 0; i < ring.expr.atoms.size(); ++i) {
        const RingAtom& atom = ring.expr.atoms[i];
        if (const auto* gf = std::get_if<GFAtom>(&atom)) {
            coords.push_back(
                eval_poly_coordinate(tokens[t].first, *gf, ring.atom_rings[i], tokens[t].second));
            ++t;
        } else if (const auto* pr = std::get_if<PresentedAtom>(&atom); pr && atom_arity(atom) == 2) {
            const int m = integer_coordinate(tokens[t].first, pr->p, tokens[t].second);
            const int n = integer_coordinate(tokens[t + 1].first, pr->p, tokens[t + 1].second);
            coords.push_back(m * pr->p + n);
            t += 2;
        } else if (const auto* pk = std::get_if<PresentedAtom>(&atom); pk && pk->kind == RingClass::K) {
            coords.push_back(eval_poly_coordinate(tokens[t].first, GFAtom{pk->p, 2},
                                                  ring.atom_rings[i], tokens[t].second));
            ++t;
        } else {
            coords.push_back(
                integer_coordinate(tokens[t].first, ring.atom_orders[i], tokens[t].second));
            ++t;
        }
    }
    return product_index(coords, ring.atom_orders);
}

std::string format_element(const BuiltRing& ring, Elem e) {
    if (e < 0 || e >= ring.ring.order()) throw Error("element index out of range");
    return ring.ring.label(e);
}

} // namespace cayring
