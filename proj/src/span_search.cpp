#include "octa/span_search.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "octa/errors.hpp"

namespace octa {

namespace {

// Per-vertex degree counters driven by XOR deltas; tracks the covered
// class count and the cardinality without rescanning the vector.
class CoverageCounters {
public:
    CoverageCounters(int n, const std::vector<int>& sizes)
        : n_(n), degrees_(n), zero_counts_(n) {
        for (int c = 0; c < n; ++c) {
            degrees_[c].assign(sizes[c], 0);
            zero_counts_[c] = sizes[c];
        }
        uncovered_ = n;
    }

    void apply(const Edge& e, bool added) {
        for (int c = 0; c < n_; ++c) {
            int& deg = degrees_[c][e[c] - 1];
            if (added) {
                if (deg++ == 0 && --zero_counts_[c] == 0) --uncovered_;
            } else {
                if (--deg == 0 && zero_counts_[c]++ == 0) ++uncovered_;
            }
        }
        cardinality_ += added ? 1 : -1;
    }

    int covered() const { return n_ - uncovered_; }
    std::uint64_t cardinality() const { return static_cast<std::uint64_t>(cardinality_); }

private:
    int n_;
    std::vector<std::vector<int>> degrees_;
    std::vector<int> zero_counts_;
    int uncovered_ = 0;
    long long cardinality_ = 0;
};

struct Candidate {
    std::uint64_t size = 0;
    std::uint64_t order = 0;  // walk step or sample index; first find wins
    EdgeSpaceVector vector;
    bool valid = false;

    void offer(std::uint64_t sz, std::uint64_t ord, const EdgeSpaceVector& v) {
        if (!valid || sz < size || (sz == size && ord < order)) {
            size = sz;
            order = ord;
            vector = v;
            valid = true;
        }
    }

    void merge(const Candidate& other) {
        if (other.valid) offer(other.size, other.order, other.vector);
    }
};

// Decoded set bits of each reduced row, so walk steps touch only the
// edges that actually change.
std::vector<std::vector<Edge>> decode_rows(const UmbrellaBasis& basis) {
    std::vector<std::vector<Edge>> rows(basis.reduced.size());
    for (std::size_t r = 0; r < basis.reduced.size(); ++r)
        rows[r] = basis.reduced[r].to_system().edges();
    return rows;
}

EdgeSpaceVector combine(const UmbrellaBasis& basis, std::uint64_t mask) {
    EdgeSpaceVector v(basis.n, basis.class_sizes);
    for (int r = 0; mask; ++r, mask >>= 1)
        if (mask & 1) v.xor_with(basis.reduced[r]);
    return v;
}

void walk_range(const UmbrellaBasis& basis, const std::vector<std::vector<Edge>>& row_edges,
                std::uint64_t begin, std::uint64_t end, std::vector<Candidate>& best) {
    const int n = basis.n;
    EdgeSpaceVector current = combine(basis, begin ^ (begin >> 1));
    CoverageCounters counters(n, basis.class_sizes);
    const OctahedralSystem initial = current.to_system();
    for (const Edge& e : initial.edges()) counters.apply(e, true);

    auto record = [&](std::uint64_t step) {
        const int k = counters.covered();
        if (k >= 1) best[k].offer(counters.cardinality(), step, current);
    };

    if (begin != 0) record(begin);
    for (std::uint64_t t = begin + 1; t < end; ++t) {
        const int flip = std::countr_zero(t);
        current.xor_with(basis.reduced[flip]);
        for (const Edge& e : row_edges[flip])
            counters.apply(e, current.bit(current.edge_index(e)));
        record(t);
    }
}

}  // namespace

const MinimumReport::PerK* MinimumReport::find(int k) const {
    for (const PerK& entry : per_k)
        if (entry.k == k) return &entry;
    return nullptr;
}

MinimumReport enumerate_minimums(int n, std::uint64_t exhaustive_budget,
                                 std::uint64_t sample_budget, std::uint64_t seed, int threads) {
    if (n < 2) throw input_error("minimum search needs n >= 2");
    if (threads < 1) throw input_error("thread count must be positive");

    const std::vector<int> sizes(static_cast<std::size_t>(n), n);
    const UmbrellaBasis basis = build_umbrella_basis(n, sizes);

    MinimumReport report;
    report.n = n;
    report.rank = basis.rank;
    report.exhaustive =
        basis.rank < 64 && (std::uint64_t{1} << basis.rank) <= exhaustive_budget;

    std::vector<std::vector<Candidate>> partials(
        static_cast<std::size_t>(threads), std::vector<Candidate>(static_cast<std::size_t>(n) + 1));

    if (report.exhaustive) {
        const std::uint64_t total = std::uint64_t{1} << basis.rank;
        report.visited = total;
        const std::vector<std::vector<Edge>> row_edges = decode_rows(basis);

        const std::uint64_t chunk = (total + threads - 1) / threads;
        std::vector<std::thread> workers;
        for (int w = 0; w < threads; ++w) {
            const std::uint64_t begin = std::min<std::uint64_t>(total, w * chunk);
            const std::uint64_t end = std::min<std::uint64_t>(total, begin + chunk);
            if (begin >= end) continue;
            workers.emplace_back([&, w, begin, end] {
                walk_range(basis, row_edges, begin, end, partials[w]);
            });
        }
        for (std::thread& t : workers) t.join();
    } else {
        report.visited = sample_budget;
        const Rng master(seed);
        const int mask_words = (basis.rank + 63) / 64;

        auto sample_range = [&](std::uint64_t begin, std::uint64_t end, std::vector<Candidate>& best) {
            for (std::uint64_t s = begin; s < end; ++s) {
                Rng rng = master.child(s);
                EdgeSpaceVector v(n, sizes);
                for (int w = 0; w < mask_words; ++w) {
                    std::uint64_t mask = rng.next_u64();
                    const int base = w * 64;
                    const int limit = std::min(64, basis.rank - base);
                    for (int b = 0; b < limit; ++b)
                        if ((mask >> b) & 1) v.xor_with(basis.reduced[base + b]);
                }
                CoverageCounters counters(n, sizes);
                const OctahedralSystem decoded = v.to_system();
                for (const Edge& e : decoded.edges()) counters.apply(e, true);
                const int k = counters.covered();
                if (k >= 1) best[k].offer(counters.cardinality(), s, v);
            }
        };

        const std::uint64_t chunk = (sample_budget + threads - 1) / threads;
        std::vector<std::thread> workers;
        for (int w = 0; w < threads; ++w) {
            const std::uint64_t begin = std::min<std::uint64_t>(sample_budget, w * chunk);
            const std::uint64_t end = std::min<std::uint64_t>(sample_budget, begin + chunk);
            if (begin >= end) continue;
            workers.emplace_back(
                [&, w, begin, end] { sample_range(begin, end, partials[w]); });
        }
        for (std::thread& t : workers) t.join();
    }

    std::vector<Candidate> merged(static_cast<std::size_t>(n) + 1);
    for (const auto& partial : partials)
        for (int k = 1; k <= n; ++k) merged[k].merge(partial[k]);

    for (int k = 1; k <= n; ++k) {
        if (!merged[k].valid) continue;
        MinimumReport::PerK entry;
        entry.k = k;
        entry.min_size = merged[k].size;
        entry.witness = merged[k].vector.to_system();
        entry.exhaustive = report.exhaustive;
        OCTA_CHECK(entry.min_size >= static_cast<std::uint64_t>(cardinality_lower_bound(n, k)),
                   "observed minimum below the cardinality floor");
        report.per_k.push_back(std::move(entry));
    }
    return report;
}

}  // namespace octa
