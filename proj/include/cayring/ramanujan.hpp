#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cayring/identify.hpp"
#include "cayring/spectrum.hpp"

namespace cayring {

// The eight sufficient-and-necessary shapes a reduced factor profile can
// take for Cay(R, xR*) to be Ramanujan, in the order they are tried.
enum class RamanujanCondition { I, II, III, IV, V, VI, VII, VIII, None };

std::string to_string(RamanujanCondition c);

struct ProfileEntry {
    long long I_size = 0;
    long long M_size = 0;
    bool unit = false;
    std::optional<RingClassLabel> klass; // filled for |I| <= 9 by full_report

    long long ratio() const { return I_size / M_size; }
};

struct ReducedInstance {
    std::vector<int> surviving_factors;  // indices into the factorization
    std::vector<Elem> y;                 // coordinates of x on those factors
    std::vector<ProfileEntry> profile;   // sorted by (ratio, |I|, |M|, unit)
    long long xRstar_size = 1;
};

/// Drops the local coordinates where x_i = 0; the reduced graph has the same
/// eigenvalue set as the original, so Ramanujan verdicts coincide.
ReducedInstance reduce_zero_coordinates(const RingTable& ring, const LocalFactorization& fact,
                                        Elem x);

/// True iff every eigenvalue of absolute value strictly below k satisfies
/// lambda^2 <= 4(k-1). Eigenvalues with |lambda| = k are exempt.
bool spectral_test(const SpectrumMultiset& spec, long long k);

/// The proof-side inequality: with the profile sorted by ratio, either every
/// ratio is 2, or the second largest absolute eigenvalue
/// |xR*| / (ratio_{t+1} - 1) must satisfy the Ramanujan bound. Decided in
/// exact integer arithmetic.
bool inequality_test(const std::vector<ProfileEntry>& profile, long long xRstar_size);

/// First matching condition shape of the reduced profile, or None.
RamanujanCondition condition_classifier(const std::vector<ProfileEntry>& profile);

/// Single-factor specialization: Ramanujan iff |I_x| = 2|M_x| or
/// 4|I_x| >= (|M_x| + 2)^2.
bool local_corollary_test(long long I_size, long long M_size);

struct RamanujanReport {
    long long k = 0;        // degree |xR*|
    long long bound_sq = 0; // 4(k-1), the squared Ramanujan bound
    bool spectral_verdict = false;
    bool inequality_verdict = false;
    RamanujanCondition condition = RamanujanCondition::None;
    std::vector<ProfileEntry> profile;

    bool ramanujan() const { return spectral_verdict; }
};

/// Runs all three tests and asserts that they agree; throws
/// InconsistencyError carrying all three verdicts when they do not.
RamanujanReport full_report(const RingTable& ring, const LocalFactorization& fact, Elem x);
RamanujanReport full_report(const RingTable& ring, Elem x);

} // namespace cayring
