#include "cayring/ring.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

namespace cayring {

namespace {

std::atomic<int> g_max_ring_order{1024};

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace

int max_ring_order() { return g_max_ring_order.load(); }

void set_max_ring_order(int cap) {
    if (cap < 2) throw Error("ring size cap must be at least 2");
    g_max_ring_order.store(cap);
}

ElementSubset::ElementSubset(int universe, std::vector<Elem> items)
    : universe_(universe), items_(std::move(items)), mask_(static_cast<std::size_t>(universe), 0) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
    for (Elem e : items_) {
        if (e < 0 || e >= universe_) throw Error("subset element out of range");
        mask_[static_cast<std::size_t>(e)] = 1;
    }
}

ElementSubset ElementSubset::full(int universe) {
    std::vector<Elem> all(static_cast<std::size_t>(universe));
    for (int i = 0; i < universe; ++i) all[static_cast<std::size_t>(i)] = i;
    return ElementSubset(universe, std::move(all));
}

std::string ElementSubset::to_string() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i) out << ',';
        out << items_[i];
    }
    out << '}';
    return out.str();
}

RingTable RingTable::from_tables(int order,
                                 std::vector<std::uint16_t> add,
                                 std::vector<std::uint16_t> mul,
                                 std::vector<std::string> labels) {
    if (order < 1) throw Error("ring order must be positive");
    if (order > max_ring_order())
        throw Error("ring order " + std::to_string(order) + " exceeds cap " +
                    std::to_string(max_ring_order()));
    const std::size_t n = static_cast<std::size_t>(order);
    if (add.size() != n * n || mul.size() != n * n)
        throw Error("operation table size does not match ring order");
    for (std::uint16_t v : add)
        if (v >= n) throw Error("addition table entry out of range");
    for (std::uint16_t v : mul)
        if (v >= n) throw Error("multiplication table entry out of range");

    const std::uint16_t* A = add.data();
    const std::uint16_t* M = mul.data();
    auto at = [n](const std::uint16_t* t, std::size_t a, std::size_t b) {
        return static_cast<std::size_t>(t[a * n + b]);
    };

    // Commutativity of both tables.
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            if (at(A, a, b) != at(A, b, a)) throw Error("addition is not commutative");
            if (at(M, a, b) != at(M, b, a)) throw Error("multiplication is not commutative");
        }

    // Additive identity, detected.
    int zero = -1;
    for (std::size_t z = 0; z < n; ++z) {
        bool ok = true;
        for (std::size_t a = 0; a < n; ++a)
            if (at(A, z, a) != a) { ok = false; break; }
        if (ok) { zero = static_cast<int>(z); break; }
    }
    if (zero < 0) throw Error("no additive identity");

    // Additive inverses.
    std::vector<Elem> neg(n, -1);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            if (at(A, a, b) == static_cast<std::size_t>(zero)) { neg[a] = static_cast<Elem>(b); break; }
        if (neg[a] < 0) throw Error("element without additive inverse");
    }

    // Associativity of both operations and distributivity, exhaustively.
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const std::size_t ab_add = at(A, a, b);
            const std::size_t ab_mul = at(M, a, b);
            const std::uint16_t* rowAa = A + a * n;
            const std::uint16_t* rowMa = M + a * n;
            const std::uint16_t* rowAdd_ab = A + ab_add * n;
            const std::uint16_t* rowMul_ab = M + ab_mul * n;
            const std::uint16_t* rowAb = A + b * n;
            const std::uint16_t* rowMb = M + b * n;
            for (std::size_t c = 0; c < n; ++c) {
                if (rowAdd_ab[c] != rowAa[rowAb[c]]) throw Error("addition is not associative");
                if (rowMul_ab[c] != rowMa[rowMb[c]]) throw Error("multiplication is not associative");
                // a*(b+c) == a*b + a*c; the symmetric law follows from
                // commutativity of multiplication.
                if (static_cast<std::size_t>(rowMa[rowAb[c]]) != at(A, ab_mul, rowMa[c]))
                    throw Error("multiplication does not distribute over addition");
            }
        }
    }

    // Multiplicative identity, if any.
    std::optional<Elem> unity;
    for (std::size_t e = 0; e < n; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n; ++a)
            if (at(M, e, a) != a) { ok = false; break; }
        if (ok) { unity = static_cast<Elem>(e); break; }
    }

    if (labels.empty()) {
        labels.resize(n);
        for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
    } else if (labels.size() != n) {
        throw Error("label count does not match ring order");
    }

    RingTable r;
    r.order_ = order;
    r.add_ = std::move(add);
    r.mul_ = std::move(mul);
    r.zero_ = zero;
    r.unity_ = unity;
    r.neg_ = std::move(neg);
    r.labels_ = std::move(labels);

    std::uint64_t h = 1469598103934665603ULL;
    h = fnv1a(h, &r.order_, sizeof(r.order_));
    h = fnv1a(h, r.add_.data(), r.add_.size() * sizeof(std::uint16_t));
    h = fnv1a(h, r.mul_.data(), r.mul_.size() * sizeof(std::uint16_t));
    const int uflag = unity ? *unity : -1;
    h = fnv1a(h, &uflag, sizeof(uflag));
    r.hash_ = h;

    if (unity) {
        std::vector<Elem> us;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (at(M, a, b) == static_cast<std::size_t>(*unity)) { us.push_back(static_cast<Elem>(a)); break; }
        r.units_ = ElementSubset(order, std::move(us));
    }
    return r;
}

int RingTable::additive_order(Elem a) const {
    Elem acc = a;
    int m = 1;
    while (acc != zero_) {
        acc = add(acc, a);
        ++m;
    }
    return m;
}

const ElementSubset& RingTable::units() const {
    if (!unity_) throw Error("ring has no unity; units are undefined");
    return units_;
}

bool RingTable::is_unit(Elem a) const { return units().contains(a); }

ElementSubset units(const RingTable& ring) { return ring.units(); }

std::optional<ElementSubset> local_maximal_ideal(const RingTable& ring) {
    const ElementSubset& us = ring.units();
    std::vector<Elem> non_units;
    non_units.reserve(static_cast<std::size_t>(ring.order() - us.size()));
    for (Elem a = 0; a < ring.order(); ++a)
        if (!us.contains(a)) non_units.push_back(a);
    ElementSubset m(ring.order(), std::move(non_units));
    for (Elem a : m)
        for (Elem b : m)
            if (!m.contains(ring.add(a, b))) return std::nullopt;
    return m;
}

bool is_local(const RingTable& ring) { return local_maximal_ideal(ring).has_value(); }

RingTable subring(const RingTable& ring, const ElementSubset& carrier) {
    if (carrier.universe() != ring.order()) throw Error("carrier universe mismatch");
    if (!carrier.contains(ring.zero())) throw Error("carrier does not contain zero");
    const int k = carrier.size();
    std::vector<int> pos(static_cast<std::size_t>(ring.order()), -1);
    for (int i = 0; i < k; ++i) pos[static_cast<std::size_t>(carrier.items()[static_cast<std::size_t>(i)])] = i;

    std::vector<std::uint16_t> add(static_cast<std::size_t>(k) * k), mul(static_cast<std::size_t>(k) * k);
    std::vector<std::string> labels(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        const Elem a = carrier.items()[static_cast<std::size_t>(i)];
        labels[static_cast<std::size_t>(i)] = ring.label(a);
        for (int j = 0; j < k; ++j) {
            const Elem b = carrier.items()[static_cast<std::size_t>(j)];
            const Elem s = ring.add(a, b);
            const Elem p = ring.mul(a, b);
            if (pos[static_cast<std::size_t>(s)] < 0 || pos[static_cast<std::size_t>(p)] < 0)
                throw Error("carrier is not closed under the ring operations");
            add[static_cast<std::size_t>(i) * k + j] = static_cast<std::uint16_t>(pos[static_cast<std::size_t>(s)]);
            mul[static_cast<std::size_t>(i) * k + j] = static_cast<std::uint16_t>(pos[static_cast<std::size_t>(p)]);
        }
    }
    return RingTable::from_tables(k, std::move(add), std::move(mul), std::move(labels));
}

RingTable quotient_ring(const RingTable& ring, const ElementSubset& carrier,
                        const ElementSubset& ideal) {
    if (carrier.universe() != ring.order() || ideal.universe() != ring.order())
        throw Error("subset universe mismatch");
    if (!ideal.contains(ring.zero())) throw Error("ideal does not contain zero");
    for (Elem a : ideal) {
        if (!carrier.contains(a)) throw Error("ideal is not contained in the carrier");
        for (Elem b : ideal)
            if (!ideal.contains(ring.add(a, b))) throw Error("ideal is not closed under addition");
        for (Elem r : carrier)
            if (!ideal.contains(ring.mul(r, a)))
                throw Error("ideal is not closed under multiplication by the carrier");
    }

    // Cosets, identified by their minimal representative.
    std::vector<int> coset_of(static_cast<std::size_t>(ring.order()), -1);
    std::vector<Elem> reps;
    for (Elem a : carrier) {
        if (coset_of[static_cast<std::size_t>(a)] >= 0) continue;
        const int id = static_cast<int>(reps.size());
        reps.push_back(a);
        for (Elem m : ideal) {
            const Elem c = ring.add(a, m);
            if (!carrier.contains(c)) throw Error("ideal cosets leave the carrier");
            coset_of[static_cast<std::size_t>(c)] = id;
        }
    }
    const int k = static_cast<int>(reps.size());
    std::vector<std::uint16_t> add(static_cast<std::size_t>(k) * k), mul(static_cast<std::size_t>(k) * k);
    std::vector<std::string> labels(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        labels[static_cast<std::size_t>(i)] = ring.label(reps[static_cast<std::size_t>(i)]);
        for (int j = 0; j < k; ++j) {
            add[static_cast<std::size_t>(i) * k + j] = static_cast<std::uint16_t>(
                coset_of[static_cast<std::size_t>(ring.add(reps[static_cast<std::size_t>(i)], reps[static_cast<std::size_t>(j)]))]);
            mul[static_cast<std::size_t>(i) * k + j] = static_cast<std::uint16_t>(
                coset_of[static_cast<std::size_t>(ring.mul(reps[static_cast<std::size_t>(i)], reps[static_cast<std::size_t>(j)]))]);
        }
    }
    return RingTable::from_tables(k, std::move(add), std::move(mul), std::move(labels));
}

RingTable quotient_ring(const RingTable& ring, const ElementSubset& ideal) {
    return quotient_ring(ring, ElementSubset::full(ring.order()), ideal);
}

} // namespace cayring
