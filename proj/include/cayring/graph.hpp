#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cayring/ideal.hpp"
#include "cayring/ring.hpp"

namespace cayring {

/// Symmetric 0/1 adjacency matrix. Loops (diagonal ones) are only allowed
/// when the matrix was created with allows_loops; they arise from factor
/// graphs whose generator coordinate is zero.
class AdjacencyMatrix {
public:
    AdjacencyMatrix() = default;
    explicit AdjacencyMatrix(int n, bool allows_loops = false);

    int size() const noexcept { return n_; }
    bool allows_loops() const noexcept { return allows_loops_; }
    bool at(int u, int v) const { return bits_[static_cast<std::size_t>(u) * n_ + v] != 0; }
    void set_edge(int u, int v);

    const std::uint8_t* row(int u) const { return bits_.data() + static_cast<std::size_t>(u) * n_; }

    int loop_count() const;
    bool operator==(const AdjacencyMatrix& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }

private:
    int n_ = 0;
    bool allows_loops_ = false;
    std::vector<std::uint8_t> bits_;
};

/// Cay(R, S): u ~ v iff u - v lies in S. S must be symmetric (-S = S);
/// loops appear exactly when S contains zero.
AdjacencyMatrix cayley_graph(const RingTable& ring, const ElementSubset& connection);

/// The common row sum, when all row sums agree (loops count once).
std::optional<long long> regular_degree(const AdjacencyMatrix& a);

/// Kronecker product of the 0/1 matrices.
AdjacencyMatrix tensor_product(const AdjacencyMatrix& a, const AdjacencyMatrix& b);

/// Connected components (loops do not connect anything); each component is
/// an ascending vertex list, components ordered by smallest vertex.
std::vector<std::vector<int>> components(const AdjacencyMatrix& a);

/// Off-diagonal bitwise complement of a loopless graph.
AdjacencyMatrix complement(const AdjacencyMatrix& a);

struct MultipartiteReport {
    bool component_count_ok = false;   // exactly |R|/|I_x| components
    bool components_are_cosets = false; // each component is a coset of I_x
    bool multipartite_ok = false;      // each component is complete |I_x|/|M_x|-partite on M_x-cosets
    bool translation_iso_ok = false;   // each component isomorphic to Cay(I_x, xR*) by translation

    bool passed() const {
        return component_count_ok && components_are_cosets && multipartite_ok && translation_iso_ok;
    }
    std::string to_string() const;
};

/// Verifies the component structure of Cay(R, xR*) over a local ring.
MultipartiteReport multipartite_check(const RingTable& ring, const GeneratorContext& ctx);

} // namespace cayring
