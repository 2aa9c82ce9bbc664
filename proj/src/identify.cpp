#include "cayring/identify.hpp"

#include <algorithm>
#include <array>
#include <tuple>

namespace cayring {

namespace {

constexpr int kIsoBound = 16;

struct Fingerprint {
    int add_order = 0;
    bool idempotent = false;
    bool square_zero = false;
    int annihilator = 0;   // |{y : xy = 0}|
    int fixed = 0;         // |{y : xy = x}|
    bool unit = false;

    auto key() const { return std::tie(add_order, idempotent, square_zero, annihilator, fixed, unit); }
    bool operator==(const Fingerprint& o) const { return key() == o.key(); }
    bool operator<(const Fingerprint& o) const { return key() < o.key(); }
};

std::vector<Fingerprint> fingerprints(const RingTable& r) {
    std::vector<Fingerprint> fp(static_cast<std::size_t>(r.order()));
    for (Elem x = 0; x < r.order(); ++x) {
        Fingerprint f;
        f.add_order = r.additive_order(x);
        f.idempotent = r.mul(x, x) == x;
        f.square_zero = r.mul(x, x) == r.zero();
        for (Elem y = 0; y < r.order(); ++y) {
            if (r.mul(x, y) == r.zero()) ++f.annihilator;
            if (r.mul(x, y) == x) ++f.fixed;
        }
        f.unit = r.has_unity() && r.is_unit(x);
        fp[static_cast<std::size_t>(x)] = f;
    }
    return fp;
}

// Additive generators of the ring, chosen deterministically: repeatedly take
// the first element of maximal additive order outside the current span.
std::vector<Elem> additive_generators(const RingTable& r) {
    const int n = r.order();
    std::vector<char> in_span(static_cast<std::size_t>(n), 0);
    in_span[static_cast<std::size_t>(r.zero())] = 1;
    int span_size = 1;
    std::vector<Elem> gens;
    while (span_size < n) {
        Elem best = -1;
        int best_ord = 0;
        for (Elem x = 0; x < n; ++x) {
            if (in_span[static_cast<std::size_t>(x)]) continue;
            const int o = r.additive_order(x);
            if (o > best_ord) { best = x; best_ord = o; }
        }
        gens.push_back(best);
        // Close the span under addition with the new generator.
        std::vector<Elem> members;
        for (Elem x = 0; x < n; ++x)
            if (in_span[static_cast<std::size_t>(x)]) members.push_back(x);
        for (Elem m : members) {
            Elem acc = m;
            for (int k = 1; k < best_ord; ++k) {
                acc = r.add(acc, best);
                if (!in_span[static_cast<std::size_t>(acc)]) {
                    in_span[static_cast<std::size_t>(acc)] = 1;
                    ++span_size;
                }
            }
        }
    }
    return gens;
}

// Extend the partial additive map by img[g] = c and close under addition.
// Returns false on any conflict.
bool extend_map(const RingTable& a, const RingTable& b, std::vector<Elem>& img, Elem g, Elem c) {
    if (img[static_cast<std::size_t>(g)] >= 0) return img[static_cast<std::size_t>(g)] == c;
    img[static_cast<std::size_t>(g)] = c;
    std::vector<Elem> work = {g};
    while (!work.empty()) {
        const Elem u = work.back();
        work.pop_back();
        const Elem iu = img[static_cast<std::size_t>(u)];
        for (Elem v = 0; v < a.order(); ++v) {
            const Elem iv = img[static_cast<std::size_t>(v)];
            if (iv < 0) continue;
            const Elem w = a.add(u, v);
            const Elem iw = b.add(iu, iv);
            if (img[static_cast<std::size_t>(w)] < 0) {
                img[static_cast<std::size_t>(w)] = iw;
                work.push_back(w);
            } else if (img[static_cast<std::size_t>(w)] != iw) {
                return false;
            }
        }
    }
    return true;
}

bool search(const RingTable& a, const RingTable& b,
            const std::vector<Fingerprint>& fa, const std::vector<Fingerprint>& fb,
            const std::vector<Elem>& gens, std::size_t depth, const std::vector<Elem>& img) {
    if (depth == gens.size()) {
        // The additive span is complete; verify the full map.
        std::vector<char> used(static_cast<std::size_t>(b.order()), 0);
        for (Elem x = 0; x < a.order(); ++x) {
            const Elem ix = img[static_cast<std::size_t>(x)];
            if (ix < 0 || used[static_cast<std::size_t>(ix)]) return false;
            used[static_cast<std::size_t>(ix)] = 1;
        }
        for (Elem x = 0; x < a.order(); ++x)
            for (Elem y = 0; y < a.order(); ++y) {
                if (img[static_cast<std::size_t>(a.add(x, y))] !=
                    b.add(img[static_cast<std::size_t>(x)], img[static_cast<std::size_t>(y)]))
                    return false;
                if (img[static_cast<std::size_t>(a.mul(x, y))] !=
                    b.mul(img[static_cast<std::size_t>(x)], img[static_cast<std::size_t>(y)]))
                    return false;
            }
        return true;
    }
    const Elem g = gens[depth];
    for (Elem c = 0; c < b.order(); ++c) {
        if (!(fa[static_cast<std::size_t>(g)] == fb[static_cast<std::size_t>(c)])) continue;
        std::vector<Elem> next = img;
        if (!extend_map(a, b, next, g, c)) continue;
        if (search(a, b, fa, fb, gens, depth + 1, next)) return true;
    }
    return false;
}

} // namespace

bool ring_isomorphic(const RingTable& a, const RingTable& b) {
    if (a.order() > kIsoBound || b.order() > kIsoBound)
        throw Error("isomorphism search is limited to rings of order <= " + std::to_string(kIsoBound));
    if (a.order() != b.order()) return false;
    if (a.has_unity() != b.has_unity()) return false;

    const auto fa = fingerprints(a);
    const auto fb = fingerprints(b);
    auto sa = fa, sb = fb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (!(sa == sb)) return false;

    std::vector<Elem> img(static_cast<std::size_t>(a.order()), -1);
    img[static_cast<std::size_t>(a.zero())] = b.zero();
    return search(a, b, fa, fb, additive_generators(a), 0, img);
}

namespace {

// The nine commutative order-p^2 kinds, in classification order.
constexpr std::array<RingClass, 9> kP2Kinds = {
    RingClass::A, RingClass::B, RingClass::C, RingClass::D, RingClass::G,
    RingClass::H, RingClass::I, RingClass::J, RingClass::K};

} // namespace

RingClassLabel identify_small_ring(const RingTable& ring) {
    const int n = ring.order();
    if (n <= 1) return {};

    if (is_prime(n))
        return {ring.has_unity() ? RingClass::Zn : RingClass::Cp0, n};

    for (int p : {2, 3}) {
        if (n != p * p) continue;
        for (RingClass kind : kP2Kinds)
            if (ring_isomorphic(ring, make_presented_p2(kind, p))) return {kind, n};
        return {};
    }

    // A unital ring whose unity has full additive order is Z_n.
    if (ring.has_unity() && ring.additive_order(*ring.unity()) == n)
        return {RingClass::Zn, n};
    // A unital ring in which every nonzero element is a unit is the field
    // of its order.
    if (ring.has_unity() && ring.units().size() == n - 1)
        return {RingClass::GF, n};

    return {};
}

} // namespace cayring
