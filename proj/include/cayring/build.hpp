#pragma once

#include <string>
#include <vector>

#include "cayring/ring.hpp"

namespace cayring {

bool is_prime(int n);

// Classification labels for small rings. The single letters name the
// commutative presentations of the order-p^2 catalog; Zn, GF and Cp0 cover
// cyclic rings, finite fields and the prime-order null rings.
enum class RingClass { Zn, GF, Cp0, A, B, C, D, G, H, I, J, K, Unidentified };

struct RingClassLabel {
    RingClass kind = RingClass::Unidentified;
    int param = 0; // n for Zn, q for GF, p for Cp0, p^2 for the letter kinds

    bool operator==(const RingClassLabel&) const = default;
    std::string to_string() const;
};

/// Z_n: addition and multiplication mod n. 2 <= n <= cap.
RingTable make_cyclic_ring(int n);

/// GF(p^k) as polynomials of degree < k over Z_p modulo the smallest monic
/// irreducible polynomial of degree k (coefficient vectors compared as
/// base-p integers, most significant digit first). Element i has coefficient
/// vector given by the base-p digits of i; labels are polynomial strings in
/// t such as "t+1" or "2t^2+t". 1 <= k <= 4.
RingTable make_galois_field(int p, int k);

/// C_p(0): additive group Z_p, every product zero. p prime; no unity.
RingTable make_null_ring(int p);

/// One of the nine commutative order-p^2 presentations (A..D, G..K). The
/// single-generator kinds A, B, C use elements m*a with labels "m"; the
/// two-generator kinds D, G, H, I, J use elements m*a + n*b at index m*p + n
/// with labels "m,n"; K delegates to make_galois_field(p, 2).
RingTable make_presented_p2(RingClass kind, int p);

/// Componentwise product of 1..6 rings. Element index is mixed-radix with
/// the first factor most significant; labels are coordinate tuples. A
/// single-factor product is returned unchanged.
RingTable make_product(const std::vector<RingTable>& factors);

// Mixed-radix helpers matching the make_product element order.
std::vector<Elem> product_coords(Elem e, const std::vector<int>& orders);
Elem product_index(const std::vector<Elem>& coords, const std::vector<int>& orders);

} // namespace cayring
