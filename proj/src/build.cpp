#include "cayring/build.hpp"

#include <algorithm>
#include <sstream>

namespace cayring {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::string RingClassLabel::to_string() const {
    switch (kind) {
        case RingClass::Zn: return "Z" + std::to_string(param);
        case RingClass::GF: return "GF(" + std::to_string(param) + ")";
        case RingClass::Cp0: return "C" + std::to_string(param) + "(0)";
        case RingClass::Unidentified: return "unidentified";
        default: break;
    }
    static const char* letters = "ABCDGHIJK";
    const int idx = static_cast<int>(kind) - static_cast<int>(RingClass::A);
    return std::string(1, letters[idx]) + std::to_string(param);
}

namespace {

void check_cap(long long order, const char* what) {
    if (order > max_ring_order())
        throw Error(std::string(what) + " of order " + std::to_string(order) +
                    " exceeds cap " + std::to_string(max_ring_order()));
}

RingTable cyclic_tables(int n, bool null_multiplication) {
    const std::size_t sz = static_cast<std::size_t>(n);
    std::vector<std::uint16_t> add(sz * sz), mul(sz * sz);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            add[static_cast<std::size_t>(a) * sz + static_cast<std::size_t>(b)] =
                static_cast<std::uint16_t>((a + b) % n);
            mul[static_cast<std::size_t>(a) * sz + static_cast<std::size_t>(b)] =
                null_multiplication ? 0
                                    : static_cast<std::uint16_t>((static_cast<long long>(a) * b) % n);
        }
    return RingTable::from_tables(n, std::move(add), std::move(mul), {});
}

// --- polynomial helpers over Z_p (coefficient index = degree) ---

using Poly = std::vector<int>;

Poly poly_mod(Poly a, const Poly& m, int p) {
    // m is monic.
    const int dm = static_cast<int>(m.size()) - 1;
    for (int d = static_cast<int>(a.size()) - 1; d >= dm; --d) {
        const int c = a[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        for (int i = 0; i <= dm; ++i) {
            int& slot = a[static_cast<std::size_t>(d - dm + i)];
            slot = ((slot - c * m[static_cast<std::size_t>(i)]) % p + p) % p;
        }
    }
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    return a;
}

bool poly_is_zero(const Poly& a) {
    return a.size() == 1 && a[0] == 0;
}

bool is_irreducible(const Poly& f, int p) {
    const int k = static_cast<int>(f.size()) - 1;
    // Trial division by all monic polynomials of degree 1..k/2.
    for (int d = 1; 2 * d <= k; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long m = 0; m < count; ++m) {
            Poly g(static_cast<std::size_t>(d) + 1, 0);
            long long v = m;
            for (int i = 0; i < d; ++i) {
                g[static_cast<std::size_t>(i)] = static_cast<int>(v % p);
                v /= p;
            }
            g[static_cast<std::size_t>(d)] = 1;
            if (poly_is_zero(poly_mod(f, g, p))) return false;
        }
    }
    return true;
}

std::string render_poly(const Poly& c) {
    std::ostringstream out;
    bool first = true;
    for (int d = static_cast<int>(c.size()) - 1; d >= 0; --d) {
        const int v = c[static_cast<std::size_t>(d)];
        if (v == 0) continue;
        if (!first) out << '+';
        first = false;
        if (d == 0) {
            out << v;
        } else {
            if (v != 1) out << v;
            out << 't';
            if (d >= 2) out << '^' << d;
        }
    }
    if (first) out << '0';
    return out.str();
}

} // namespace

RingTable make_cyclic_ring(int n) {
    if (n < 2) throw Error("cyclic ring requires n >= 2");
    check_cap(n, "cyclic ring");
    return cyclic_tables(n, false);
}

RingTable make_null_ring(int p) {
    if (!is_prime(p)) throw Error("null ring C_p(0) requires a prime p");
    check_cap(p, "null ring");
    return cyclic_tables(p, true);
}

RingTable make_galois_field(int p, int k) {
    if (!is_prime(p)) throw Error("Galois field requires a prime characteristic");
    if (k < 1 || k > 4) throw Error("Galois field extension degree must be in 1..4");
    long long order = 1;
    for (int i = 0; i < k; ++i) order *= p;
    check_cap(order, "Galois field");
    const int n = static_cast<int>(order);

    // Smallest monic irreducible modulus of degree k.
    Poly modulus;
    for (long long m = 0; m < order; ++m) {
        Poly f(static_cast<std::size_t>(k) + 1, 0);
        long long v = m;
        for (int i = 0; i < k; ++i) {
            f[static_cast<std::size_t>(i)] = static_cast<int>(v % p);
            v /= p;
        }
        f[static_cast<std::size_t>(k)] = 1;
        if (is_irreducible(f, p)) {
            modulus = f;
            break;
        }
    }
    if (modulus.empty()) throw Error("no irreducible polynomial found"); // unreachable

    auto coeffs_of = [&](int e) {
        Poly c(static_cast<std::size_t>(k), 0);
        for (int i = 0; i < k; ++i) {
            c[static_cast<std::size_t>(i)] = e % p;
            e /= p;
        }
        return c;
    };
    auto index_of = [&](const Poly& c) {
        int e = 0;
        for (int i = k - 1; i >= 0; --i)
            e = e * p + (i < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(i)] : 0);
        return e;
    };

    const std::size_t sz = static_cast<std::size_t>(n);
    std::vector<std::uint16_t> add(sz * sz), mul(sz * sz);
    std::vector<std::string> labels(sz);
    std::vector<Poly> elems(sz);
    for (int e = 0; e < n; ++e) {
        elems[static_cast<std::size_t>(e)] = coeffs_of(e);
        Poly trimmed = elems[static_cast<std::size_t>(e)];
        while (trimmed.size() > 1 && trimmed.back() == 0) trimmed.pop_back();
        labels[static_cast<std::size_t>(e)] = render_poly(trimmed);
    }
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const Poly& ca = elems[static_cast<std::size_t>(a)];
            const Poly& cb = elems[static_cast<std::size_t>(b)];
            Poly s(static_cast<std::size_t>(k), 0);
            for (int i = 0; i < k; ++i)
                s[static_cast<std::size_t>(i)] = (ca[static_cast<std::size_t>(i)] + cb[static_cast<std::size_t>(i)]) % p;
            Poly prod(static_cast<std::size_t>(2 * k - 1), 0);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    prod[static_cast<std::size_t>(i + j)] =
                        (prod[static_cast<std::size_t>(i + j)] + ca[static_cast<std::size_t>(i)] * cb[static_cast<std::size_t>(j)]) % p;
            const Poly r = poly_mod(std::move(prod), modulus, p);
            add[static_cast<std::size_t>(a) * sz + static_cast<std::size_t>(b)] = static_cast<std::uint16_t>(index_of(s));
            mul[static_cast<std::size_t>(a) * sz + static_cast<std::size_t>(b)] = static_cast<std::uint16_t>(index_of(r));
        }
    }
    return RingTable::from_tables(n, std::move(add), std::move(mul), std::move(labels));
}

RingTable make_presented_p2(RingClass kind, int p) {
    if (!is_prime(p)) throw Error("presented order-p^2 ring requires a prime p");
    const long long n2 = static_cast<long long>(p) * p;
    check_cap(n2, "presented ring");
    const int n = static_cast<int>(n2);

    switch (kind) {
        case RingClass::A:
            return make_cyclic_ring(n);
        case RingClass::C:
            return cyclic_tables(n, true);
        case RingClass::K:
            return make_galois_field(p, 2);
        case RingClass::B: {
            // Elements m*a with (m*a)(n*a) = m*n*p*a mod p^2.
            const std::size_t sz = static_cast<std::size_t>(n);
            std::vector<std::uint16_t> add(sz * sz), mul(sz * sz);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    add[static_cast<std::size_t>(a) * sz + static_cast<std::size_t>(b)] =
                        static_cast<std::uint16_t>((a + b) % n);
                    mul[static_cast<std::size_t>(a) * sz + static_cast<std::size_t>(b)] =
                        static_cast<std::uint16_t>((static_cast<long long>(a) * b * p) % n);
                }
            return RingTable::from_tables(n, std::move(add), std::move(mul), {});
        }
        case RingClass::D:
        case RingClass::G:
        case RingClass::H:
        case RingClass::I:
        case RingClass::J: {
            // Elements m*a + n*b at index m*p + n.
            const std::size_t sz = static_cast<std::size_t>(n);
            std::vector<std::uint16_t> add(sz * sz), mul(sz * sz);
            std::vector<std::string> labels(sz);
            for (int m = 0; m < p; ++m)
                for (int q = 0; q < p; ++q)
                    labels[static_cast<std::size_t>(m * p + q)] =
                        std::to_string(m) + "," + std::to_string(q);
            for (int i = 0; i < n; ++i) {
                const int m1 = i / p, n1 = i % p;
                for (int j = 0; j < n; ++j) {
                    const int m2 = j / p, n2c = j % p;
                    add[static_cast<std::size_t>(i) * sz + static_cast<std::size_t>(j)] =
                        static_cast<std::uint16_t>(((m1 + m2) % p) * p + (n1 + n2c) % p);
                    int pm = 0, pn = 0;
                    switch (kind) {
                        case RingClass::D: pm = (m1 * m2) % p; pn = (n1 * n2c) % p; break;
                        case RingClass::G: pm = (m1 * n2c + n1 * m2) % p; pn = (n1 * n2c) % p; break;
                        case RingClass::H: pn = (n1 * n2c) % p; break;
                        case RingClass::I: pn = (m1 * m2) % p; break;
                        case RingClass::J: break;
                        default: break;
                    }
                    mul[static_cast<std::size_t>(i) * sz + static_cast<std::size_t>(j)] =
                        static_cast<std::uint16_t>(pm * p + pn);
                }
            }
            return RingTable::from_tables(n, std::move(add), std::move(mul), std::move(labels));
        }
        default:
            throw Error("presented kind must be one of A,B,C,D,G,H,I,J,K "
                        "(E and F are not commutative)");
    }
}

std::vector<Elem> product_coords(Elem e, const std::vector<int>& orders) {
    std::vector<Elem> c(orders.size());
    for (std::size_t i = orders.size(); i-- > 0;) {
        c[i] = e % orders[i];
        e /= orders[i];
    }
    return c;
}

Elem product_index(const std::vector<Elem>& coords, const std::vector<int>& orders) {
    Elem e = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) e = e * orders[i] + coords[i];
    return e;
}

RingTable make_product(const std::vector<RingTable>& factors) {
    if (factors.empty() || factors.size() > 6)
        throw Error("product requires between 1 and 6 factors");
    if (factors.size() == 1) return factors.front();

    long long order = 1;
    std::vector<int> orders;
    orders.reserve(factors.size());
    for (const RingTable& f : factors) {
        order *= f.order();
        orders.push_back(f.order());
        check_cap(order, "product ring");
    }
    const int n = static_cast<int>(order);
    const std::size_t sz = static_cast<std::size_t>(n);

    std::vector<std::uint16_t> add(sz * sz), mul(sz * sz);
    std::vector<std::string> labels(sz);
    std::vector<std::vector<Elem>> coords(sz);
    for (int e = 0; e < n; ++e) {
        coords[static_cast<std::size_t>(e)] = product_coords(e, orders);
        std::ostringstream lab;
        lab << '(';
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) lab << ", ";
            lab << factors[i].label(coords[static_cast<std::size_t>(e)][i]);
        }
        lab << ')';
        labels[static_cast<std::size_t>(e)] = lab.str();
    }
    std::vector<Elem> sc(factors.size()), pc(factors.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const auto& ca = coords[static_cast<std::size_t>(a)];
            const auto& cb = coords[static_cast<std::size_t>(b)];
            for (std::size_t i = 0; i < factors.size(); ++i) {
                sc[i] = factors[i].add(ca[i], cb[i]);
                pc[i] = factors[i].mul(ca[i], cb[i]);
            }
            add[static_cast<std::size_t>(a) * sz + static_cast<std::size_t>(b)] =
                static_cast<std::uint16_t>(product_index(sc, orders));
            mul[static_cast<std::size_t>(a) * sz + static_cast<std::size_t>(b)] =
                static_cast<std::uint16_t>(product_index(pc, orders));
        }
    return RingTable::from_tables(n, std::move(add), std::move(mul), std::move(labels));
}

} // namespace cayring
