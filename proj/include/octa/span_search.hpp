#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "octa/edgespace.hpp"
#include "octa/octahedral.hpp"
#include "octa/rng.hpp"

namespace octa {

// Minimum observed cardinality per covered-class count over the umbrella
// span of the shape (n, ..., n).
struct MinimumReport {
    struct PerK {
        int k = 0;
        std::uint64_t min_size = 0;
        OctahedralSystem witness;
        bool exhaustive = false;
    };

    int n = 0;
    int rank = 0;
    bool exhaustive = false;        // whole span walked
    std::uint64_t visited = 0;      // span elements or samples inspected
    std::vector<PerK> per_k;        // ascending k, only k >= 1 entries present

    const PerK* find(int k) const;
};

// Walks the whole span in Gray-code order when 2^rank fits the exhaustive
// budget, one row XOR per step with incremental degree bookkeeping;
// otherwise draws `sample_budget` seeded random combinations. `threads`
// partitions the walk by leading combination bits; results do not depend
// on the partition.
MinimumReport enumerate_minimums(int n, std::uint64_t exhaustive_budget = std::uint64_t{1} << 24,
                                 std::uint64_t sample_budget = 1'000'000,
                                 std::uint64_t seed = kDefaultSeed, int threads = 1);

}  // namespace octa
