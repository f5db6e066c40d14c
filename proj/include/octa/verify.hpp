#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "octa/io.hpp"
#include "octa/rng.hpp"

namespace octa::verify {

using nlohmann::json;

// Outcome of one verification sweep. `details` holds the deterministic
// summary fields a report prints; every violation carries a full witness.
struct CheckReport {
    std::string mode;
    std::uint64_t checked = 0;
    json details = json::object();
    std::vector<json> violations;

    bool ok() const { return violations.empty(); }
};

// Walks (or samples) the umbrella span of shape (n,...,n) and checks every
// per-k minimum against the cardinality floor k(n-2)+2; witnesses must be
// octahedral.
CheckReport run_bound_check(int n, std::uint64_t exhaustive_budget = std::uint64_t{1} << 24,
                            std::uint64_t sample_budget = 1'000'000,
                            std::uint64_t seed = kDefaultSeed, int threads = 1);

// Cross-oracle equivalence on shape (n,...,n): span members and
// single-edge-perturbed non-members must satisfy in_span <=> is_octahedral.
CheckReport run_span_equivalence(int n, std::uint64_t cases, std::uint64_t seed = kDefaultSeed);

// Generates configurations and checks depth >= d^2+1 plus the parity of
// every induced system.
CheckReport run_depth_floor(int d, std::uint64_t trials, std::uint64_t seed = kDefaultSeed,
                            int threads = 1);

// Random umbrella combinations: umbrella_decomposition must recompose
// exactly with covered colours only, and suitable_decomposition must
// satisfy its five structural facts.
CheckReport run_decomposition_roundtrip(int n, std::uint64_t trials,
                                        std::uint64_t seed = kDefaultSeed);

// Random simplices for d in [1..d_max]: the linear-solve and feasibility
// routes must agree wherever both apply, and all certificates must
// re-verify exactly.
CheckReport run_predicate_crosscheck(int d_max, std::uint64_t cases,
                                     std::uint64_t seed = kDefaultSeed);

}  // namespace octa::verify
