#include "cayring/factor.hpp"

#include <algorithm>
#include <map>

namespace cayring {

Elem LocalFactorization::element_of(const std::vector<Elem>& cs) const {
    if (cs.size() != factors.size()) throw Error("coordinate arity mismatch");
    // The embedding is a bijection, so invert by lookup.
    for (Elem r = 0; r < parent_order; ++r)
        if (coords[static_cast<std::size_t>(r)] == cs) return r;
    throw Error("coordinates do not name a ring element");
}

LocalFactorization local_factorization(const RingTable& ring) {
    if (!ring.has_unity()) throw Error("local factorization requires a ring with unity");
    const int n = ring.order();
    const Elem one = *ring.unity();

    std::vector<Elem> idempotents;
    for (Elem e = 0; e < n; ++e)
        if (ring.mul(e, e) == e) idempotents.push_back(e);

    // e is primitive iff the only idempotents below it are 0 and e itself.
    std::vector<Elem> primitive;
    for (Elem e : idempotents) {
        if (e == ring.zero()) continue;
        bool prim = true;
        for (Elem f : idempotents) {
            const Elem ef = ring.mul(e, f);
            if (ef != ring.zero() && ef != e) { prim = false; break; }
        }
        if (prim) primitive.push_back(e);
    }

    // Sanity: pairwise orthogonal and summing to unity.
    Elem sum = ring.zero();
    for (Elem e : primitive) sum = ring.add(sum, e);
    if (sum != one) throw InconsistencyError("primitive idempotents do not sum to unity");
    for (std::size_t i = 0; i < primitive.size(); ++i)
        for (std::size_t j = i + 1; j < primitive.size(); ++j)
            if (ring.mul(primitive[i], primitive[j]) != ring.zero())
                throw InconsistencyError("primitive idempotents are not orthogonal");

    std::vector<LocalFactor> factors;
    for (Elem e : primitive) {
        std::vector<Elem> carrier_items;
        for (Elem r = 0; r < n; ++r) carrier_items.push_back(ring.mul(e, r));
        ElementSubset carrier(n, std::move(carrier_items));

        LocalFactor f;
        f.idempotent = e;
        f.ring = (carrier.size() == n) ? ring : subring(ring, carrier);
        f.carrier = carrier.items();
        auto m = local_maximal_ideal(f.ring);
        if (!m) throw InconsistencyError("idempotent factor is not local");
        f.maximal_ideal = std::move(*m);
        factors.push_back(std::move(f));
    }

    // Sort by |R_i|/m_i nondecreasing (compared exactly by cross
    // multiplication), ties by (order, table hash).
    std::stable_sort(factors.begin(), factors.end(), [](const LocalFactor& a, const LocalFactor& b) {
        const long long lhs = static_cast<long long>(a.ring.order()) * b.maximal_ideal.size();
        const long long rhs = static_cast<long long>(b.ring.order()) * a.maximal_ideal.size();
        if (lhs != rhs) return lhs < rhs;
        if (a.ring.order() != b.ring.order()) return a.ring.order() < b.ring.order();
        return a.ring.table_hash() < b.ring.table_hash();
    });

    LocalFactorization out;
    out.parent_order = n;
    out.coords.assign(static_cast<std::size_t>(n), {});

    std::vector<std::vector<int>> pos_in_factor;
    for (const LocalFactor& f : factors) {
        std::vector<int> pos(static_cast<std::size_t>(n), -1);
        for (std::size_t j = 0; j < f.carrier.size(); ++j)
            pos[static_cast<std::size_t>(f.carrier[j])] = static_cast<int>(j);
        pos_in_factor.push_back(std::move(pos));
        out.orders.push_back(f.ring.order());
    }
    for (Elem r = 0; r < n; ++r) {
        auto& cs = out.coords[static_cast<std::size_t>(r)];
        cs.resize(factors.size());
        for (std::size_t i = 0; i < factors.size(); ++i) {
            const Elem er = ring.mul(factors[i].idempotent, r);
            cs[i] = pos_in_factor[i][static_cast<std::size_t>(er)];
        }
    }

    // The embedding must be a bijection...
    long long prod = 1;
    for (int o : out.orders) prod *= o;
    if (prod != n) throw InconsistencyError("factor orders do not multiply to the ring order");
    std::map<std::vector<Elem>, Elem> seen;
    for (Elem r = 0; r < n; ++r)
        if (!seen.emplace(out.coords[static_cast<std::size_t>(r)], r).second)
            throw InconsistencyError("coordinate embedding is not injective");

    // ...and respect both operations coordinatewise.
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            const Elem s = ring.add(a, b);
            const Elem p = ring.mul(a, b);
            for (std::size_t i = 0; i < factors.size(); ++i) {
                const RingTable& fr = factors[i].ring;
                if (out.coords[static_cast<std::size_t>(s)][i] !=
                    fr.add(out.coords[static_cast<std::size_t>(a)][i], out.coords[static_cast<std::size_t>(b)][i]))
                    throw InconsistencyError("embedding does not respect addition");
                if (out.coords[static_cast<std::size_t>(p)][i] !=
                    fr.mul(out.coords[static_cast<std::size_t>(a)][i], out.coords[static_cast<std::size_t>(b)][i]))
                    throw InconsistencyError("embedding does not respect multiplication");
            }
        }

    out.factors = std::move(factors);
    return out;
}

} // namespace cayring
