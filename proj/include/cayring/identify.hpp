#pragma once

#include "cayring/build.hpp"
#include "cayring/ring.hpp"

namespace cayring {

/// True iff some bijection carries both operation tables of `a` onto those
/// of `b`. Brute force with element-fingerprint pruning; both orders must
/// be at most 16.
bool ring_isomorphic(const RingTable& a, const RingTable& b);

/// Classify a small ring: prime order by presence of unity, order 4 or 9
/// against the commutative presentation catalog, cyclic rings by the
/// additive order of unity, and finite fields by their unit count.
/// Returns Unidentified when no rule applies; never throws.
RingClassLabel identify_small_ring(const RingTable& ring);

} // namespace cayring
