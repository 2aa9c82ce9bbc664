#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cayring/errors.hpp"

namespace cayring {

// Ring elements are indices 0..order-1 into the operation tables.
using Elem = int;

// Size cap for constructed rings (and graphs built from them). Constructions
// beyond the cap are rejected. Set once at startup; tables themselves are
// immutable afterwards.
int max_ring_order();
void set_max_ring_order(int cap);

/// A subset of the elements of one ring, with O(1) membership and sorted
/// iteration order.
class ElementSubset {
public:
    ElementSubset() = default;
    ElementSubset(int universe, std::vector<Elem> items);

    static ElementSubset full(int universe);

    int universe() const noexcept { return universe_; }
    int size() const noexcept { return static_cast<int>(items_.size()); }
    bool empty() const noexcept { return items_.empty(); }
    bool contains(Elem e) const { return e >= 0 && e < universe_ && mask_[static_cast<std::size_t>(e)] != 0; }

    // Ascending element indices.
    const std::vector<Elem>& items() const noexcept { return items_; }
    auto begin() const noexcept { return items_.begin(); }
    auto end() const noexcept { return items_.end(); }

    bool operator==(const ElementSubset& other) const {
        return universe_ == other.universe_ && items_ == other.items_;
    }

    std::string to_string() const;

private:
    int universe_ = 0;
    std::vector<Elem> items_;
    std::vector<std::uint8_t> mask_;
};

/// A finite commutative ring as explicit operation tables. Validated
/// exhaustively at construction: the additive group axioms, commutativity
/// and associativity of both operations, and distributivity. The additive
/// identity and (when one exists) the multiplicative identity are detected,
/// and additive inverses and the unit set are cached.
///
/// Instances are immutable after construction and safe to share across
/// threads.
class RingTable {
public:
    RingTable() = default;

    // `add` and `mul` are order*order row-major tables with entries in
    // 0..order-1. `labels` may be empty (decimal indices are used) or must
    // have one entry per element. Throws Error if the tables do not describe
    // a finite commutative ring or the cap is exceeded.
    static RingTable from_tables(int order,
                                 std::vector<std::uint16_t> add,
                                 std::vector<std::uint16_t> mul,
                                 std::vector<std::string> labels);

    int order() const noexcept { return order_; }
    Elem zero() const noexcept { return zero_; }
    bool has_unity() const noexcept { return unity_.has_value(); }
    std::optional<Elem> unity() const noexcept { return unity_; }

    Elem add(Elem a, Elem b) const { return add_[static_cast<std::size_t>(a) * order_ + b]; }
    Elem mul(Elem a, Elem b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
    Elem neg(Elem a) const { return neg_[static_cast<std::size_t>(a)]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    // Smallest m >= 1 with m*a = 0.
    int additive_order(Elem a) const;

    // Units of a unital ring; throws Error on a non-unital ring.
    const ElementSubset& units() const;
    bool is_unit(Elem a) const;

    const std::string& label(Elem a) const { return labels_[static_cast<std::size_t>(a)]; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    // FNV-1a over both tables plus the unity flag; used for deterministic
    // tie-breaking, not for isomorphism testing.
    std::uint64_t table_hash() const noexcept { return hash_; }

    bool same_tables(const RingTable& other) const {
        return order_ == other.order_ && add_ == other.add_ && mul_ == other.mul_;
    }

private:
    int order_ = 0;
    std::vector<std::uint16_t> add_;
    std::vector<std::uint16_t> mul_;
    Elem zero_ = 0;
    std::optional<Elem> unity_;
    std::vector<Elem> neg_;
    ElementSubset units_;
    std::vector<std::string> labels_;
    std::uint64_t hash_ = 0;
};

/// Units of R: {u : exists v with u*v = 1}. Requires unity.
ElementSubset units(const RingTable& ring);

/// The maximal ideal of a local ring, i.e. its non-unit set when that set is
/// closed under addition; nullopt when the ring is not local. Requires unity.
std::optional<ElementSubset> local_maximal_ideal(const RingTable& ring);

bool is_local(const RingTable& ring);

/// The subring on `carrier` (which must contain zero and be closed under
/// both operations) as a standalone table. Element i of the result is
/// carrier.items()[i]; labels are inherited.
RingTable subring(const RingTable& ring, const ElementSubset& carrier);

/// Quotient of the subring on `carrier` by `ideal`: `ideal` must be an
/// additive subgroup of `carrier` closed under multiplication by `carrier`.
/// Labels are the labels of the minimal coset representatives.
RingTable quotient_ring(const RingTable& ring, const ElementSubset& carrier,
                        const ElementSubset& ideal);

/// Quotient of the whole ring by `ideal`.
RingTable quotient_ring(const RingTable& ring, const ElementSubset& ideal);

} // namespace cayring
