#pragma once

#include <map>
#include <string>

#include "cayring/factor.hpp"
#include "cayring/graph.hpp"
#include "cayring/ideal.hpp"

namespace cayring {

/// Integer eigenvalues with positive multiplicities.
class SpectrumMultiset {
public:
    void add(long long lambda, long long mult);

    long long multiplicity(long long lambda) const;
    bool contains(long long lambda) const { return entries_.count(lambda) != 0; }

    const std::map<long long, long long>& entries() const noexcept { return entries_; }

    long long total_multiplicity() const; // matrix dimension
    long long trace() const;              // sum lambda * mult
    long long second_moment() const;      // sum lambda^2 * mult
    long long energy() const;             // sum |lambda| * mult

    bool operator==(const SpectrumMultiset&) const = default;
    std::string to_string() const; // descending eigenvalue order

private:
    std::map<long long, long long> entries_;
};

/// Spectrum of Cay(R, xR*) over a local ring R: eigenvalue |xR*| with
/// multiplicity |R|/|I_x|, eigenvalue -|M_x| with multiplicity
/// |R||xR*| / (|I_x||M_x|), and 0 with multiplicity (|R|/|M_x|)(|M_x|-1).
SpectrumMultiset closed_form_spectrum_local(const RingTable& ring, const GeneratorContext& ctx);

/// Spectrum of Cay(R, xR*) for an arbitrary unital ring, evaluated from the
/// local factorization: one eigenvalue per subset of the nonzero
/// coordinates, coinciding values merged, plus the zero eigenvalue.
SpectrumMultiset closed_form_spectrum(const RingTable& ring, const LocalFactorization& fact,
                                      Elem x);
SpectrumMultiset closed_form_spectrum(const RingTable& ring, Elem x);

/// Independent verification oracle: full eigendecomposition of the symmetric
/// 0/1 matrix by cyclic Jacobi rotations, run per connected component until
/// the off-diagonal Frobenius norm drops below `tol`. Eigenvalues are
/// rounded to integers; throws if any rounding residual exceeds
/// `round_guard` or rounding changes the trace.
SpectrumMultiset oracle_spectrum(const AdjacencyMatrix& a, double tol = 1e-10,
                                 double round_guard = 1e-6);

/// Spectrum of the complement of a k-regular loopless graph on n vertices:
/// one copy of k becomes n-k-1, every other eigenvalue lambda becomes
/// -1-lambda.
SpectrumMultiset complement_spectrum(const SpectrumMultiset& spec, long long n, long long k);

/// Energy 2^{|P|} |R| |xR*| / |I_x| of Cay(R, xR*), exact.
long long energy_closed_form(const RingTable& ring, const LocalFactorization& fact, Elem x);
long long energy_closed_form(const RingTable& ring, Elem x);

/// Energy of the complement graph, exact.
long long complement_energy_closed_form(const RingTable& ring, const LocalFactorization& fact,
                                        Elem x);
long long complement_energy_closed_form(const RingTable& ring, Elem x);

inline long long energy_from_spectrum(const SpectrumMultiset& spec) { return spec.energy(); }

} // namespace cayring
