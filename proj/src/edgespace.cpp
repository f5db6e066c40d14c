#include "octa/edgespace.hpp"

#include <bit>

#include "octa/bitops.hpp"
#include "octa/errors.hpp"

namespace octa {

namespace {

constexpr std::uint64_t kEdgeSpaceBitBudget = std::uint64_t{1} << 20;

std::uint64_t checked_space_size(int n, const std::vector<int>& class_sizes) {
    if (n < 1 || static_cast<int>(class_sizes.size()) != n)
        throw input_error("bad shape for edge space");
    std::uint64_t bits = 1;
    for (int s : class_sizes) {
        if (s < 2) throw input_error("classes need at least 2 vertices");
        bits *= static_cast<std::uint64_t>(s);
        if (bits > kEdgeSpaceBitBudget)
            throw resource_error("edge space exceeds the bit budget (2^20 bits)");
    }
    return bits;
}

}  // namespace

EdgeSpaceVector::EdgeSpaceVector(int n, std::vector<int> class_sizes)
    : n_(n), class_sizes_(std::move(class_sizes)) {
    bits_ = checked_space_size(n_, class_sizes_);
    words_.assign((bits_ + 63) / 64, 0);
}

EdgeSpaceVector EdgeSpaceVector::from_system(const OctahedralSystem& os) {
    EdgeSpaceVector v(os.n(), os.class_sizes());
    for (const Edge& e : os.edges()) v.flip_bit(v.edge_index(e));
    return v;
}

OctahedralSystem EdgeSpaceVector::to_system() const {
    std::vector<Edge> edges;
    edges.reserve(popcount());
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t word = words_[w];
        while (word) {
            const int b = std::countr_zero(word);
            word &= word - 1;
            edges.push_back(edge_at((static_cast<std::uint64_t>(w) << 6) + b));
        }
    }
    return OctahedralSystem(n_, class_sizes_, std::move(edges));
}

std::uint64_t EdgeSpaceVector::edge_index(const Edge& e) const {
    if (static_cast<int>(e.size()) != n_) throw input_error("edge arity mismatch");
    std::uint64_t idx = 0;
    for (int c = 0; c < n_; ++c) {
        if (e[c] < 1 || e[c] > class_sizes_[c]) throw input_error("edge component out of range");
        idx = idx * static_cast<std::uint64_t>(class_sizes_[c]) +
              static_cast<std::uint64_t>(e[c] - 1);
    }
    return idx;
}

Edge EdgeSpaceVector::edge_at(std::uint64_t index) const {
    Edge e(n_);
    for (int c = n_ - 1; c >= 0; --c) {
        e[c] = static_cast<int>(index % static_cast<std::uint64_t>(class_sizes_[c])) + 1;
        index /= static_cast<std::uint64_t>(class_sizes_[c]);
    }
    return e;
}

void EdgeSpaceVector::xor_with(const EdgeSpaceVector& other) {
    if (!same_shape(other)) throw input_error("edge-space shape mismatch");
    bitops::xor_inplace(words_.data(), other.words_.data(), words_.size());
}

std::uint64_t EdgeSpaceVector::popcount() const {
    return bitops::popcount(words_.data(), words_.size());
}

bool EdgeSpaceVector::zero() const { return bitops::is_zero(words_.data(), words_.size()); }

bool EdgeSpaceVector::same_shape(const EdgeSpaceVector& other) const {
    return n_ == other.n_ && class_sizes_ == other.class_sizes_;
}

std::uint64_t EdgeSpaceVector::lowest_set_bit() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w])
            return (static_cast<std::uint64_t>(w) << 6) +
                   static_cast<std::uint64_t>(std::countr_zero(words_[w]));
    return bits_;
}

UmbrellaBasis build_umbrella_basis(int n, const std::vector<int>& class_sizes) {
    checked_space_size(n, class_sizes);

    UmbrellaBasis basis;
    basis.n = n;
    basis.class_sizes = class_sizes;

    // Colour-major, transversal odometer in ascending class order.
    for (int colour = 1; colour <= n; ++colour) {
        std::vector<int> transversal(n - 1, 1);
        for (;;) {
            Umbrella u{colour, transversal};
            basis.umbrella_order.push_back(u);
            basis.generators.push_back(
                EdgeSpaceVector::from_system(expand_umbrella(u, n, class_sizes)));
            int pos = n - 2;
            for (; pos >= 0; --pos) {
                const int cls = pos < colour - 1 ? pos : pos + 1;  // class behind slot pos
                if (++transversal[pos] <= class_sizes[cls]) break;
                transversal[pos] = 1;
            }
            if (pos < 0) break;
        }
    }

    // GF(2) elimination to reduced row-echelon form, pivots ascending.
    for (const EdgeSpaceVector& gen : basis.generators) {
        EdgeSpaceVector row = gen;
        for (std::size_t r = 0; r < basis.reduced.size(); ++r)
            if (row.bit(basis.pivots[r])) row.xor_with(basis.reduced[r]);
        if (row.zero()) continue;
        const std::uint64_t pivot = row.lowest_set_bit();
        for (std::size_t r = 0; r < basis.reduced.size(); ++r)
            if (basis.reduced[r].bit(pivot)) basis.reduced[r].xor_with(row);
        std::size_t at = 0;
        while (at < basis.pivots.size() && basis.pivots[at] < pivot) ++at;
        basis.reduced.insert(basis.reduced.begin() + at, std::move(row));
        basis.pivots.insert(basis.pivots.begin() + at, pivot);
    }
    basis.rank = static_cast<int>(basis.reduced.size());
    return basis;
}

bool in_span(const EdgeSpaceVector& v, const UmbrellaBasis& basis) {
    if (v.n() != basis.n || v.class_sizes() != basis.class_sizes)
        throw input_error("vector shape does not match basis shape");
    EdgeSpaceVector row = v;
    for (std::size_t r = 0; r < basis.reduced.size(); ++r)
        if (row.bit(basis.pivots[r])) row.xor_with(basis.reduced[r]);
    return row.zero();
}

}  // namespace octa
