#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cayring/dsl.hpp"

namespace cayring {

struct VerifyOptions {
    int max_order = 512;             // drop family rings larger than this
    int zn_max = 36;                 // Z_n line of the family: 2 <= n <= zn_max
    int oracle_cap = 512;            // eigendecomposition bound for direct spectra
    int complement_oracle_cap = 256; // eigendecomposition bound for complements
    int exhaustive_x_max = 64;       // every nonzero x when |R| <= this
    int sample_count = 64;           // sampled x count otherwise
    std::uint64_t seed = 0;          // sampling seed
    int jobs = 0;                    // worker threads; 0 = hardware concurrency
    bool with_oracle = true;
};

struct CheckCounter {
    long long run = 0;
    long long failed = 0;
};

/// One failing check, with the instance data needed to reproduce it.
struct InstanceFailure {
    std::string ring;
    std::string x; // element label; empty for ring-level failures
    std::string check;
    std::string detail;

    long long order = 0;
    long long xRstar = 0;
    long long Ix = 0;
    std::vector<long long> Mx_per_factor;
    std::vector<std::pair<long long, long long>> spectrum; // (eigenvalue, multiplicity), descending
    long long energy = -1;
    long long complement_energy = -1;
    int ramanujan = -1; // 1 true, 0 false, -1 unknown
    std::string condition;
};

struct VerifySummary {
    long long rings = 0;
    long long instances = 0;
    long long lemma_pairs = 0;
    std::map<std::string, CheckCounter> checks;
    std::vector<InstanceFailure> failures;

    long long total_checks() const;
    long long total_failed() const;
    bool ok() const { return failures.empty(); }
};

/// The enumerated verification family: Z_n for 2 <= n <= zn_max together
/// with all products of up to three factors drawn from
/// {Z2, Z3, Z4, Z8, Z9, GF(4), GF(9), A4, G4, A9, G9}, deduplicated, within
/// the order bound.
std::vector<std::string> family_ring_specs(const VerifyOptions& opt);

/// Runs the whole sweep: construction and embedding validation, parser round
/// trips, the lemma suite on every (factor, x) pair, spectra against the
/// eigendecomposition oracle, energy and complement-energy identities, and
/// the three-way Ramanujan agreement. Deterministic for a fixed seed;
/// instances may be checked on a worker pool and are reduced in family
/// order.
VerifySummary run_verification(const VerifyOptions& opt,
                               const std::function<void(const std::string&)>& progress = {});

} // namespace cayring
