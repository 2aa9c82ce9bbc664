#include "cayring/ramanujan.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace cayring {

std::string to_string(RamanujanCondition c) {
    switch (c) {
        case RamanujanCondition::I: return "i";
        case RamanujanCondition::II: return "ii";
        case RamanujanCondition::III: return "iii";
        case RamanujanCondition::IV: return "iv";
        case RamanujanCondition::V: return "v";
        case RamanujanCondition::VI: return "vi";
        case RamanujanCondition::VII: return "vii";
        case RamanujanCondition::VIII: return "viii";
        case RamanujanCondition::None: return "none";
    }
    return "none";
}

ReducedInstance reduce_zero_coordinates(const RingTable& ring, const LocalFactorization& fact,
                                        Elem x) {
    const auto profiles = coordinate_profiles(ring, fact, x);
    ReducedInstance out;
    for (const auto& p : profiles) {
        out.surviving_factors.push_back(p.factor_index);
        out.y.push_back(p.xi);
        ProfileEntry e;
        e.I_size = p.I_size;
        e.M_size = p.M_size;
        e.unit = p.unit;
        out.profile.push_back(e);
        out.xRstar_size *= p.I_size - p.M_size;
    }
    std::sort(out.profile.begin(), out.profile.end(), [](const ProfileEntry& a, const ProfileEntry& b) {
        return std::tuple(a.ratio(), a.I_size, a.M_size, a.unit) <
               std::tuple(b.ratio(), b.I_size, b.M_size, b.unit);
    });
    return out;
}

bool spectral_test(const SpectrumMultiset& spec, long long k) {
    if (!spec.contains(k)) throw Error("degree k is absent from the spectrum");
    const long long bound_sq = 4 * (k - 1);
    for (const auto& [lambda, mult] : spec.entries()) {
        const long long abs_l = lambda < 0 ? -lambda : lambda;
        if (abs_l >= k) continue; // |lambda| = k is exempt by definition
        if (lambda * lambda > bound_sq) return false;
    }
    return true;
}

bool inequality_test(const std::vector<ProfileEntry>& profile, long long xRstar_size) {
    if (profile.empty()) throw Error("inequality test requires a nonempty profile");
    for (std::size_t i = 0; i + 1 < profile.size(); ++i)
        if (profile[i].ratio() > profile[i + 1].ratio())
            throw Error("profile must be sorted by nondecreasing ratio");

    // All ratios 2: the only nonzero eigenvalues are +-|xR*|.
    auto first_big = std::find_if(profile.begin(), profile.end(),
                                  [](const ProfileEntry& e) { return e.ratio() > 2; });
    if (first_big == profile.end()) return true;

    const long long lambda = xRstar_size / (first_big->ratio() - 1);
    return lambda * lambda <= 4 * (xRstar_size - 1);
}

namespace {

// q2 <= q1 + sqrt(q1 (q1 - 2)), exactly, assuming q2 >= q1 >= 2.
bool within_single_radical(long long q1, long long q2) {
    const long long d = q2 - q1;
    return d * d <= q1 * (q1 - 2);
}

// q2 <= 2 (q1 + sqrt(q1 (q1 - 2))) - 1, exactly.
bool within_double_radical(long long q1, long long q2) {
    const long long d = q2 + 1 - 2 * q1;
    if (d <= 0) return true;
    return d * d <= 4 * q1 * (q1 - 2);
}

// prod_M <= 2 (e - 1 + sqrt(e (e - 2))), exactly.
bool within_ratio_radical(long long prod_M, long long e) {
    const long long d = prod_M - 2 * (e - 1);
    if (d <= 0) return true;
    return d * d <= 4 * e * (e - 2);
}

} // namespace

RamanujanCondition condition_classifier(const std::vector<ProfileEntry>& profile) {
    if (profile.empty()) throw Error("condition classifier requires a nonempty profile");
    const std::size_t r = profile.size();

    const bool all_M_one =
        std::all_of(profile.begin(), profile.end(), [](const auto& e) { return e.M_size == 1; });
    const std::size_t big = static_cast<std::size_t>(
        std::count_if(profile.begin(), profile.end(), [](const auto& e) { return e.ratio() > 2; }));

    // (i) every quotient I_{x_i}/M_{x_i} has order 2.
    if (big == 0) return RamanujanCondition::I;

    // (ii)-(iv): trivial maximal ideals with a {3,3,3}, {3,3,4} or {4,4,4}
    // tail after the 2s.
    if (all_M_one && r >= 3) {
        auto tail_is_twos = [&](std::size_t keep) {
            for (std::size_t i = 0; i + keep < r; ++i)
                if (profile[i].I_size != 2) return false;
            return true;
        };
        const auto& a = profile[r - 3];
        const auto& b = profile[r - 2];
        const auto& c = profile[r - 1];
        if (tail_is_twos(3)) {
            if (a.I_size == 3 && b.I_size == 3 && c.I_size == 3) return RamanujanCondition::II;
            if (a.I_size == 3 && b.I_size == 3 && c.I_size == 4 && c.unit)
                return RamanujanCondition::III;
            if (a.I_size == 4 && b.I_size == 4 && c.I_size == 4 && a.unit && b.unit && c.unit)
                return RamanujanCondition::IV;
        }
    }

    // (v) one (9,3) factor, one (3,1), the rest (2,1).
    {
        int nine = 0, three = 0, two = 0;
        for (const auto& e : profile) {
            if (e.I_size == 9 && e.M_size == 3) ++nine;
            else if (e.I_size == 3 && e.M_size == 1) ++three;
            else if (e.I_size == 2 && e.M_size == 1) ++two;
        }
        if (nine == 1 && three == 1 && static_cast<std::size_t>(two) == r - 2)
            return RamanujanCondition::V;
    }

    // (vi) one (4,2) factor, all others with trivial maximal ideal: the 2s
    // followed by exactly two entries q1 <= q2 within the radical bound.
    if (big == 2 && r >= 3) {
        int four_two = 0, two_one = 0;
        for (std::size_t i = 0; i + 2 < r; ++i) {
            if (profile[i].I_size == 4 && profile[i].M_size == 2) ++four_two;
            else if (profile[i].I_size == 2 && profile[i].M_size == 1) ++two_one;
        }
        const auto& p1 = profile[r - 2];
        const auto& p2 = profile[r - 1];
        if (four_two == 1 && static_cast<std::size_t>(two_one) == r - 3 && p1.M_size == 1 &&
            p2.M_size == 1 && p1.I_size >= 3 && within_single_radical(p1.I_size, p2.I_size))
            return RamanujanCondition::VI;
    }

    // (vii) all trivial maximal ideals: 2s followed by exactly two entries
    // q1 <= q2 within the doubled radical bound.
    if (all_M_one && big == 2) {
        bool rest_twos = true;
        for (std::size_t i = 0; i + 2 < r; ++i)
            if (profile[i].I_size != 2) rest_twos = false;
        const auto& p1 = profile[r - 2];
        const auto& p2 = profile[r - 1];
        if (rest_twos && p1.I_size >= 3 && within_double_radical(p1.I_size, p2.I_size))
            return RamanujanCondition::VII;
    }

    // (viii) a single factor of ratio e >= 3, everything else of ratio 2,
    // with the product of all |M_{y_i}| within the radical bound.
    if (big == 1) {
        long long prod_M = 1;
        for (const auto& e : profile) prod_M *= e.M_size;
        const long long e = profile.back().ratio();
        if (within_ratio_radical(prod_M, e)) return RamanujanCondition::VIII;
    }

    return RamanujanCondition::None;
}

bool local_corollary_test(long long I_size, long long M_size) {
    if (I_size == 2 * M_size) return true;
    return 4 * I_size >= (M_size + 2) * (M_size + 2);
}

RamanujanReport full_report(const RingTable& ring, const LocalFactorization& fact, Elem x) {
    ReducedInstance reduced = reduce_zero_coordinates(ring, fact, x);

    RamanujanReport rep;
    rep.k = reduced.xRstar_size;
    rep.bound_sq = 4 * (rep.k - 1);
    rep.spectral_verdict = spectral_test(closed_form_spectrum(ring, fact, x), rep.k);
    rep.inequality_verdict = inequality_test(reduced.profile, reduced.xRstar_size);
    rep.condition = condition_classifier(reduced.profile);
    rep.profile = std::move(reduced.profile);

    // Report catalog labels for the small principal ideals, matching sorted
    // profile entries back to surviving coordinates by their sizes.
    for (auto& entry : rep.profile) {
        if (entry.I_size > 9 || entry.klass) continue;
        for (std::size_t i = 0; i < reduced.surviving_factors.size(); ++i) {
            const auto& factor =
                fact.factors[static_cast<std::size_t>(reduced.surviving_factors[i])];
            const GeneratorContext c = build_context(factor.ring, reduced.y[i]);
            if (c.Ix.size() == entry.I_size && c.Mx.size() == entry.M_size &&
                factor.ring.is_unit(reduced.y[i]) == entry.unit) {
                entry.klass = identify_small_ring(subring(factor.ring, c.Ix));
                break;
            }
        }
    }

    const bool c_verdict = rep.condition != RamanujanCondition::None;
    if (rep.spectral_verdict != rep.inequality_verdict || rep.spectral_verdict != c_verdict) {
        std::ostringstream msg;
        msg << "Ramanujan verdicts disagree: spectral=" << rep.spectral_verdict
            << " inequality=" << rep.inequality_verdict << " condition=" << to_string(rep.condition)
            << " (k=" << rep.k << ")";
        throw InconsistencyError(msg.str());
    }
    return rep;
}

RamanujanReport full_report(const RingTable& ring, Elem x) {
    return full_report(ring, local_factorization(ring), x);
}

} // namespace cayring
