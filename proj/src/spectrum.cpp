#include "cayring/spectrum.hpp"

#include <cmath>
#include <sstream>

namespace cayring {

void SpectrumMultiset::add(long long lambda, long long mult) {
    if (mult < 0) throw Error("negative multiplicity");
    if (mult == 0) return;
    entries_[lambda] += mult;
}

long long SpectrumMultiset::multiplicity(long long lambda) const {
    const auto it = entries_.find(lambda);
    return it == entries_.end() ? 0 : it->second;
}

long long SpectrumMultiset::total_multiplicity() const {
    long long t = 0;
    for (const auto& [l, m] : entries_) t += m;
    return t;
}

long long SpectrumMultiset::trace() const {
    long long t = 0;
    for (const auto& [l, m] : entries_) t += l * m;
    return t;
}

long long SpectrumMultiset::second_moment() const {
    long long t = 0;
    for (const auto& [l, m] : entries_) t += l * l * m;
    return t;
}

long long SpectrumMultiset::energy() const {
    long long t = 0;
    for (const auto& [l, m] : entries_) t += (l < 0 ? -l : l) * m;
    return t;
}

std::string SpectrumMultiset::to_string() const {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
        if (!first) out << ", ";
        first = false;
        out << it->first << ':' << it->second;
    }
    out << '}';
    return out.str();
}

namespace {

long long exact_div(long long a, long long b, const char* what) {
    if (b == 0 || a % b != 0)
        throw InconsistencyError(std::string("expected exact division in ") + what);
    return a / b;
}

} // namespace

SpectrumMultiset closed_form_spectrum_local(const RingTable& ring, const GeneratorContext& ctx) {
    if (!is_local(ring)) throw Error("local closed form requires a local ring");
    const long long n = ring.order();
    const long long k = ctx.xRstar.size();
    const long long I = ctx.Ix.size();
    const long long M = ctx.Mx.size();

    SpectrumMultiset s;
    s.add(k, exact_div(n, I, "local spectrum"));
    s.add(-M, exact_div(n * k, I * M, "local spectrum"));
    s.add(0, exact_div(n, M, "local spectrum") * (M - 1));
    return s;
}

SpectrumMultiset closed_form_spectrum(const RingTable& ring, const LocalFactorization& fact,
                                      Elem x) {
    const auto profiles = coordinate_profiles(ring, fact, x);
    const long long n = ring.order();

    long long I = 1, k = 1, ratio_prod = 1;
    std::vector<long long> w; // |x_i R_i^*| / |M_{x_i}| = ratio_i - 1, an integer
    for (const auto& p : profiles) {
        I *= p.I_size;
        k *= p.I_size - p.M_size;
        ratio_prod *= p.ratio();
        w.push_back(exact_div(p.I_size - p.M_size, p.M_size, "coordinate ratio"));
    }
    const long long base = exact_div(n, I, "spectrum multiplicity");

    SpectrumMultiset s;
    for (std::uint32_t mask = 0; mask < (1u << w.size()); ++mask) {
        long long denom = 1, mult = base;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (mask & (1u << i)) {
                denom *= w[i];
                mult *= w[i];
            }
        const long long lambda = exact_div(k, denom, "eigenvalue");
        const bool odd = __builtin_popcount(mask) & 1;
        s.add(odd ? -lambda : lambda, mult);
    }
    s.add(0, n - base * ratio_prod);
    return s;
}

SpectrumMultiset closed_form_spectrum(const RingTable& ring, Elem x) {
    return closed_form_spectrum(ring, local_factorization(ring), x);
}

namespace {

// Cyclic Jacobi with the usual early-sweep threshold; `a` is n*n row-major
// symmetric and only the upper triangle is referenced. Appends the
// eigenvalues to `out`.
void jacobi_eigenvalues(std::vector<double>& a, int n, double tol, std::vector<double>& out) {
    const std::size_t N = static_cast<std::size_t>(n);
    std::vector<double> d(N), b(N), z(N, 0.0);
    for (std::size_t i = 0; i < N; ++i) b[i] = d[i] = a[i * N + i];

    auto rotate = [&a, N](std::size_t i, std::size_t j, std::size_t k, std::size_t l, double s,
                          double tau) {
        const double g = a[i * N + j];
        const double h = a[k * N + l];
        a[i * N + j] = g - s * (h + g * tau);
        a[k * N + l] = h + s * (g - h * tau);
    };

    const double tol2 = tol * tol;
    for (int sweep = 1; sweep <= 60; ++sweep) {
        double sm = 0.0, off2 = 0.0;
        for (std::size_t p = 0; p + 1 < N; ++p) {
            const double* row = a.data() + p * N;
            for (std::size_t q = p + 1; q < N; ++q) {
                const double v = row[q];
                sm += std::fabs(v);
                off2 += v * v;
            }
        }
        if (2.0 * off2 <= tol2) {
            for (std::size_t i = 0; i < N; ++i) out.push_back(d[i]);
            return;
        }
        const double tresh = sweep < 4 ? 0.2 * sm / (static_cast<double>(n) * n) : 0.0;
        for (std::size_t p = 0; p + 1 < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                const double apq = a[p * N + q];
                const double g = 100.0 * std::fabs(apq);
                if (sweep > 4 && std::fabs(d[p]) + g == std::fabs(d[p]) &&
                    std::fabs(d[q]) + g == std::fabs(d[q])) {
                    a[p * N + q] = 0.0;
                } else if (std::fabs(apq) > tresh) {
                    double h = d[q] - d[p];
                    double t;
                    if (std::fabs(h) + g == std::fabs(h)) {
                        t = apq / h;
                    } else {
                        const double theta = 0.5 * h / apq;
                        t = 1.0 / (std::fabs(theta) + std::sqrt(1.0 + theta * theta));
                        if (theta < 0.0) t = -t;
                    }
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double s = t * c;
                    const double tau = s / (1.0 + c);
                    h = t * apq;
                    z[p] -= h;
                    z[q] += h;
                    d[p] -= h;
                    d[q] += h;
                    a[p * N + q] = 0.0;
                    for (std::size_t j = 0; j < p; ++j) rotate(j, p, j, q, s, tau);
                    for (std::size_t j = p + 1; j < q; ++j) rotate(p, j, j, q, s, tau);
                    for (std::size_t j = q + 1; j < N; ++j) rotate(p, j, q, j, s, tau);
                }
            }
        }
        for (std::size_t i = 0; i < N; ++i) {
            b[i] += z[i];
            d[i] = b[i];
            z[i] = 0.0;
        }
    }
    throw Error("oracle eigensolver did not converge within the iteration budget");
}

} // namespace

SpectrumMultiset oracle_spectrum(const AdjacencyMatrix& a, double tol, double round_guard) {
    const auto comps = components(a);
    // Eigenvalues of a block-diagonal matrix are the union over the blocks;
    // split so each block meets its share of the off-diagonal budget.
    const double block_tol = tol / std::sqrt(static_cast<double>(comps.size()));

    std::vector<double> eigen;
    eigen.reserve(static_cast<std::size_t>(a.size()));
    std::vector<double> block;
    for (const auto& comp : comps) {
        const int m = static_cast<int>(comp.size());
        if (m == 1) {
            eigen.push_back(a.at(comp[0], comp[0]) ? 1.0 : 0.0);
            continue;
        }
        block.assign(static_cast<std::size_t>(m) * m, 0.0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                block[static_cast<std::size_t>(i) * m + j] = a.at(comp[static_cast<std::size_t>(i)], comp[static_cast<std::size_t>(j)]) ? 1.0 : 0.0;
        jacobi_eigenvalues(block, m, block_tol, eigen);
    }

    SpectrumMultiset s;
    long long rounded_trace = 0;
    for (double v : eigen) {
        const long long r = std::llround(v);
        if (std::fabs(v - static_cast<double>(r)) > round_guard)
            throw Error("oracle eigenvalue " + std::to_string(v) +
                        " is not integral within the rounding guard");
        rounded_trace += r;
        s.add(r, 1);
    }
    if (rounded_trace != a.loop_count())
        throw Error("rounded oracle spectrum changes the trace");
    return s;
}

SpectrumMultiset complement_spectrum(const SpectrumMultiset& spec, long long n, long long k) {
    if (!spec.contains(k)) throw Error("degree k is absent from the spectrum");
    SpectrumMultiset out;
    out.add(n - k - 1, 1);
    for (const auto& [lambda, mult] : spec.entries()) {
        const long long m = mult - (lambda == k ? 1 : 0);
        out.add(-1 - lambda, m);
    }
    return out;
}

long long energy_closed_form(const RingTable& ring, const LocalFactorization& fact, Elem x) {
    const auto profiles = coordinate_profiles(ring, fact, x);
    long long I = 1, k = 1;
    for (const auto& p : profiles) {
        I *= p.I_size;
        k *= p.I_size - p.M_size;
    }
    const long long pow2 = 1LL << profiles.size();
    return pow2 * exact_div(ring.order(), I, "energy") * k;
}

long long energy_closed_form(const RingTable& ring, Elem x) {
    return energy_closed_form(ring, local_factorization(ring), x);
}

long long complement_energy_closed_form(const RingTable& ring, const LocalFactorization& fact,
                                        Elem x) {
    const auto profiles = coordinate_profiles(ring, fact, x);
    const long long n = ring.order();
    long long I = 1, k = 1, lo = 1, hi = 1;
    for (const auto& p : profiles) {
        const long long w = exact_div(p.I_size - p.M_size, p.M_size, "coordinate ratio");
        I *= p.I_size;
        k *= p.I_size - p.M_size;
        lo *= 1 - w;
        hi *= 1 + w;
    }
    const long long pow2 = 1LL << profiles.size();
    const long long value = 2 * (n - k - 1) + exact_div(n, I, "complement energy") * (pow2 * k + lo - hi);
    if (value < 0) throw InconsistencyError("complement energy came out negative");
    return value;
}

long long complement_energy_closed_form(const RingTable& ring, Elem x) {
    return complement_energy_closed_form(ring, local_factorization(ring), x);
}

} // namespace cayring
