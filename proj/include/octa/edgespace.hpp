#pragma once

#include <cstdint>
#include <vector>

#include "octa/octahedral.hpp"

namespace octa {

// Indicator bit-vector over V_1 x ... x V_n in the canonical lexicographic
// edge order (class 1 most significant). Backs the GF(2) algebra.
class EdgeSpaceVector {
public:
    EdgeSpaceVector() = default;
    EdgeSpaceVector(int n, std::vector<int> class_sizes);

    static EdgeSpaceVector from_system(const OctahedralSystem& os);
    OctahedralSystem to_system() const;

    int n() const { return n_; }
    const std::vector<int>& class_sizes() const { return class_sizes_; }
    std::uint64_t bit_count() const { return bits_; }
    std::size_t word_count() const { return words_.size(); }
    const std::uint64_t* words() const { return words_.data(); }
    std::uint64_t* words() { return words_.data(); }

    std::uint64_t edge_index(const Edge& e) const;
    Edge edge_at(std::uint64_t index) const;

    bool bit(std::uint64_t index) const {
        return (words_[index >> 6] >> (index & 63)) & 1;
    }
    void flip_bit(std::uint64_t index) { words_[index >> 6] ^= std::uint64_t{1} << (index & 63); }

    void xor_with(const EdgeSpaceVector& other);
    std::uint64_t popcount() const;
    bool zero() const;
    bool same_shape(const EdgeSpaceVector& other) const;

    // Lowest set bit index, or bit_count() when zero.
    std::uint64_t lowest_set_bit() const;

    friend bool operator==(const EdgeSpaceVector& a, const EdgeSpaceVector& b) {
        return a.n_ == b.n_ && a.class_sizes_ == b.class_sizes_ && a.words_ == b.words_;
    }

private:
    int n_ = 0;
    std::vector<int> class_sizes_;
    std::uint64_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

// Umbrella indicator vectors with their GF(2) row reduction. The reduced
// rows are in reduced row-echelon form with ascending pivot positions, so
// construction is deterministic for a fixed shape.
struct UmbrellaBasis {
    int n = 0;
    std::vector<int> class_sizes;
    std::vector<Umbrella> umbrella_order;        // generator i expands umbrella_order[i]
    std::vector<EdgeSpaceVector> generators;     // one per (colour, transversal)
    std::vector<EdgeSpaceVector> reduced;        // RREF rows spanning the same space
    std::vector<std::uint64_t> pivots;           // pivot bit of each reduced row
    int rank = 0;
};

// Builds every umbrella vector over the shape and row-reduces them.
// Shapes beyond the bit budget (2^20 edge-space bits) raise resource_error.
UmbrellaBasis build_umbrella_basis(int n, const std::vector<int>& class_sizes);

// True iff v is a GF(2) combination of the basis generators.
bool in_span(const EdgeSpaceVector& v, const UmbrellaBasis& basis);

}  // namespace octa
