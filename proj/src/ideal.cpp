#include "cayring/ideal.hpp"

#include <algorithm>
#include <sstream>

namespace cayring {

GeneratorContext build_context(const RingTable& ring, Elem x) {
    if (!ring.has_unity()) throw Error("generator context requires a ring with unity");
    if (x == ring.zero()) throw Error("generator x must be nonzero");
    const int n = ring.order();

    std::vector<Elem> orbit;
    for (Elem u : ring.units()) orbit.push_back(ring.mul(x, u));
    ElementSubset xRstar(n, std::move(orbit));

    // In a unital commutative ring the ideal generated by x is exactly xR.
    std::vector<Elem> ideal;
    for (Elem r = 0; r < n; ++r) ideal.push_back(ring.mul(x, r));
    ElementSubset Ix(n, std::move(ideal));

    std::vector<Elem> boundary, ann;
    for (Elem e : Ix)
        if (!xRstar.contains(e)) boundary.push_back(e);
    for (Elem r = 0; r < n; ++r)
        if (ring.mul(x, r) == ring.zero()) ann.push_back(r);

    GeneratorContext ctx;
    ctx.x = x;
    ctx.xRstar = std::move(xRstar);
    ctx.Ix = std::move(Ix);
    ctx.Mx = ElementSubset(n, std::move(boundary));
    ctx.Ax = ElementSubset(n, std::move(ann));

    if (ctx.xRstar.size() + ctx.Mx.size() != ctx.Ix.size())
        throw InconsistencyError("xR* and M_x do not partition I_x");
    return ctx;
}

std::string LemmaReport::summary() const {
    std::ostringstream out;
    for (const auto& c : checks) {
        out << c.name << ": "
            << (c.status == CheckStatus::Pass ? "pass"
                                              : c.status == CheckStatus::Fail ? "FAIL" : "skipped");
        if (!c.detail.empty()) out << " (" << c.detail << ")";
        out << '\n';
    }
    return out.str();
}

namespace {

bool is_prime_power(long long n, long long p) {
    if (n < 1) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

long long smallest_prime_factor(long long n) {
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return d;
    return n;
}

// Ideal of the subring I_x generated by a subset, by closure under addition
// and multiplication by I_x.
ElementSubset ideal_closure(const RingTable& ring, const ElementSubset& Ix,
                            std::vector<Elem> seed) {
    std::vector<std::uint8_t> in(static_cast<std::size_t>(ring.order()), 0);
    std::vector<Elem> work = seed;
    for (Elem e : seed) in[static_cast<std::size_t>(e)] = 1;
    if (!in[static_cast<std::size_t>(ring.zero())]) {
        in[static_cast<std::size_t>(ring.zero())] = 1;
        work.push_back(ring.zero());
        seed.push_back(ring.zero());
    }
    std::vector<Elem> members = seed;
    while (!work.empty()) {
        const Elem a = work.back();
        work.pop_back();
        std::vector<Elem> fresh;
        for (Elem b : members) {
            const Elem s = ring.add(a, b);
            if (!in[static_cast<std::size_t>(s)]) { in[static_cast<std::size_t>(s)] = 1; fresh.push_back(s); }
        }
        for (Elem r : Ix) {
            const Elem p = ring.mul(a, r);
            if (!in[static_cast<std::size_t>(p)]) { in[static_cast<std::size_t>(p)] = 1; fresh.push_back(p); }
        }
        for (Elem f : fresh) { members.push_back(f); work.push_back(f); }
    }
    return ElementSubset(ring.order(), std::move(members));
}

} // namespace

LemmaReport lemma_suite(const RingTable& ring, const GeneratorContext& ctx) {
    auto maximal = local_maximal_ideal(ring);
    if (!maximal) throw Error("lemma suite requires a local ring");
    const ElementSubset& M = *maximal;
    const int n = ring.order();
    const bool x_unit = ring.is_unit(ctx.x);

    LemmaReport report;
    auto add = [&report](std::string name, CheckStatus st, std::string detail = "") {
        report.checks.push_back({std::move(name), st, std::move(detail)});
    };
    auto check = [&add](std::string name, bool ok, std::string detail = "") {
        add(std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail));
    };

    // |R|, |M| and |R|/|M| are powers of one prime.
    {
        const long long p = smallest_prime_factor(n);
        const bool ok = is_prime_power(n, p) && (M.size() == 1 || is_prime_power(M.size(), p)) &&
                        n % M.size() == 0 && is_prime_power(n / M.size(), p);
        check("prime_power_orders", ok,
              "|R|=" + std::to_string(n) + " |M|=" + std::to_string(M.size()));
    }

    // M_x = xM.
    {
        std::vector<Elem> xm;
        for (Elem m : M) xm.push_back(ring.mul(ctx.x, m));
        check("boundary_is_xM", ElementSubset(n, std::move(xm)) == ctx.Mx);
    }

    // If xr lands in M_x then r was a non-unit.
    {
        bool ok = true;
        for (Elem r = 0; r < n && ok; ++r)
            if (ctx.Mx.contains(ring.mul(ctx.x, r)) && !M.contains(r)) ok = false;
        check("boundary_preimage", ok);
    }

    // M_x is an ideal of I_x, and adjoining any element of xR*
    // generates all of I_x.
    {
        bool ideal_ok = true;
        for (Elem a : ctx.Mx) {
            for (Elem b : ctx.Mx)
                if (!ctx.Mx.contains(ring.add(a, b))) ideal_ok = false;
            for (Elem r : ctx.Ix)
                if (!ctx.Mx.contains(ring.mul(a, r))) ideal_ok = false;
        }
        bool maximal_ok = true;
        for (Elem w : ctx.xRstar) {
            std::vector<Elem> seed = ctx.Mx.items();
            seed.push_back(w);
            if (!(ideal_closure(ring, ctx.Ix, std::move(seed)) == ctx.Ix)) {
                maximal_ok = false;
                break;
            }
        }
        check("boundary_maximal_in_ideal", ideal_ok && maximal_ok);
    }

    // |I_x|/|M_x| = |R|/|M|, compared by cross multiplication.
    check("index_ratio",
          static_cast<long long>(ctx.Ix.size()) * M.size() ==
              static_cast<long long>(n) * ctx.Mx.size(),
          "|I_x|=" + std::to_string(ctx.Ix.size()) + " |M_x|=" + std::to_string(ctx.Mx.size()));

    // x unit with |M_x| = 1: I_x is a field.
    if (x_unit && ctx.Mx.size() == 1) {
        const RingTable sub = subring(ring, ctx.Ix);
        const bool ok = sub.has_unity() && sub.units().size() == sub.order() - 1;
        check("unit_generator_field", ok);
    } else {
        add("unit_generator_field", CheckStatus::Skipped);
    }

    // x non-unit with |M_x| = 1: I_x is C_p(0) for a prime p.
    if (!x_unit && ctx.Mx.size() == 1) {
        const RingClassLabel label = identify_small_ring(subring(ring, ctx.Ix));
        check("nonunit_generator_null", label.kind == RingClass::Cp0,
              "identified as " + label.to_string());
    } else {
        add("nonunit_generator_null", CheckStatus::Skipped);
    }

    // x non-unit with x^2 != 0: |I_x| <= |M_x|^2, witnessed by the
    // injection xr + (A_x ∩ M_x) -> x^2 r.
    const Elem x2 = ring.mul(ctx.x, ctx.x);
    if (!x_unit && x2 != ring.zero()) {
        bool ok = static_cast<long long>(ctx.Ix.size()) <=
                  static_cast<long long>(ctx.Mx.size()) * ctx.Mx.size();
        for (Elem r = 0; r < n && ok; ++r) {
            for (Elem s = 0; s < n && ok; ++s) {
                const Elem diff = ring.sub(ring.mul(ctx.x, r), ring.mul(ctx.x, s));
                const bool same_coset = ctx.Ax.contains(diff) && ctx.Mx.contains(diff);
                const bool same_image = ring.mul(x2, r) == ring.mul(x2, s);
                if (same_coset != same_image) ok = false; // well-defined and injective
            }
        }
        check("square_bound_injection", ok);
    } else {
        add("square_bound_injection", CheckStatus::Skipped);
    }

    // |M_x| > 1: |I_x| <= |M_x|^2.
    if (ctx.Mx.size() > 1) {
        check("boundary_square_bound",
              static_cast<long long>(ctx.Ix.size()) <=
                  static_cast<long long>(ctx.Mx.size()) * ctx.Mx.size());
    } else {
        add("boundary_square_bound", CheckStatus::Skipped);
    }

    return report;
}

std::vector<CoordinateProfile> coordinate_profiles(const RingTable& ring,
                                                   const LocalFactorization& fact, Elem x) {
    if (x == ring.zero()) throw Error("generator x must be nonzero");
    std::vector<CoordinateProfile> out;
    for (int i = 0; i < fact.size(); ++i) {
        const Elem xi = fact.coordinate(x, i);
        const RingTable& fr = fact.factors[static_cast<std::size_t>(i)].ring;
        if (xi == fr.zero()) continue;
        const GeneratorContext c = build_context(fr, xi);
        CoordinateProfile p;
        p.factor_index = i;
        p.xi = xi;
        p.I_size = c.Ix.size();
        p.M_size = c.Mx.size();
        p.unit = fr.is_unit(xi);
        out.push_back(p);
    }
    return out;
}

} // namespace cayring
