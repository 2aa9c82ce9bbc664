#pragma once

#include <string>
#include <vector>

#include "cayring/factor.hpp"
#include "cayring/identify.hpp"
#include "cayring/ring.hpp"

namespace cayring {

/// The connection-set data of a nonzero generator x in a unital commutative
/// ring: the orbit xR* of x under the units, the principal ideal I_x = xR,
/// the boundary M_x = I_x \ xR*, and the annihilator A_x = {r : xr = 0}.
/// Valid only together with the ring it was built from.
struct GeneratorContext {
    Elem x = 0;
    ElementSubset xRstar;
    ElementSubset Ix;
    ElementSubset Mx;
    ElementSubset Ax;
};

GeneratorContext build_context(const RingTable& ring, Elem x);

enum class CheckStatus { Pass, Fail, Skipped };

struct NamedCheck {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

struct LemmaReport {
    std::vector<NamedCheck> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) return false;
        return true;
    }
    std::string summary() const;
};

/// Exhaustively verifies the structural facts about I_x and M_x over a local
/// ring: M_x = xM, the preimage property, maximality of M_x inside I_x, the
/// index identity |I_x|/|M_x| = |R|/|M|, the field / null-ring
/// identifications when |M_x| = 1, and the |I_x| <= |M_x|^2 bounds together
/// with their injection witness. Throws on a non-local ring.
LemmaReport lemma_suite(const RingTable& ring, const GeneratorContext& ctx);

/// Per-coordinate profile of x across the local factors: sizes of I_{x_i}
/// and M_{x_i} and whether x_i is a unit, for the nonzero coordinates only.
struct CoordinateProfile {
    int factor_index = 0;
    Elem xi = 0;
    long long I_size = 0;
    long long M_size = 0;
    bool unit = false;

    long long ratio() const { return I_size / M_size; }
};

std::vector<CoordinateProfile> coordinate_profiles(const RingTable& ring,
                                                   const LocalFactorization& fact, Elem x);

} // namespace cayring
