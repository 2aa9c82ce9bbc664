#pragma once

#include <vector>

#include "cayring/ring.hpp"

namespace cayring {

struct LocalFactor {
    RingTable ring;              // standalone table of e*R, unity e
    ElementSubset maximal_ideal; // within the factor's own index space
    std::vector<Elem> carrier;   // factor element j <-> parent element carrier[j]
    Elem idempotent = 0;         // the primitive idempotent e, as a parent element
};

/// Decomposition of a unital finite commutative ring into local factors via
/// its primitive idempotents, with the coordinate embedding
/// r -> (e_1 r, ..., e_s r). Factors are sorted so that |R_i| / m_i is
/// nondecreasing, ties broken by (order, table hash) for determinism.
///
/// The embedding is validated at construction: it is a bijection and
/// respects both operations coordinatewise.
struct LocalFactorization {
    std::vector<LocalFactor> factors;
    std::vector<int> orders;               // factor orders, in factor order
    std::vector<std::vector<Elem>> coords; // parent element -> factor coordinates
    int parent_order = 0;

    int size() const { return static_cast<int>(factors.size()); }
    Elem coordinate(Elem parent, int factor) const {
        return coords[static_cast<std::size_t>(parent)][static_cast<std::size_t>(factor)];
    }
    /// Parent element with the given factor coordinates.
    Elem element_of(const std::vector<Elem>& cs) const;
};

LocalFactorization local_factorization(const RingTable& ring);

} // namespace cayring
