#include "octa/verify.hpp"

#include <algorithm>
#include <thread>

#include "octa/decompose.hpp"
#include "octa/edgespace.hpp"
#include "octa/errors.hpp"
#include "octa/geometry.hpp"
#include "octa/span_search.hpp"

namespace octa::verify {

namespace {

json points_to_json(const std::vector<Point>& points) {
    json out = json::array();
    for (const Point& p : points) {
        json coords = json::array();
        for (const Rational& c : p) coords.push_back(format_rational(c));
        out.push_back(std::move(coords));
    }
    return out;
}

}  // namespace

CheckReport run_bound_check(int n, std::uint64_t exhaustive_budget, std::uint64_t sample_budget,
                            std::uint64_t seed, int threads) {
    const MinimumReport report =
        enumerate_minimums(n, exhaustive_budget, sample_budget, seed, threads);

    CheckReport check;
    check.mode = "bound";
    check.checked = report.visited;
    check.details["n"] = n;
    check.details["rank"] = report.rank;
    check.details["exhaustive"] = report.exhaustive;
    json per_k = json::array();
    for (const MinimumReport::PerK& entry : report.per_k) {
        per_k.push_back(json{{"k", entry.k},
                             {"min", entry.min_size},
                             {"bound", cardinality_lower_bound(n, entry.k)},
                             {"exhaustive", entry.exhaustive}});
        if (entry.min_size < static_cast<std::uint64_t>(cardinality_lower_bound(n, entry.k)))
            check.violations.push_back(json{{"kind", "below-bound"},
                                            {"k", entry.k},
                                            {"min", entry.min_size},
                                            {"bound", cardinality_lower_bound(n, entry.k)},
                                            {"witness", io::system_to_json(entry.witness)}});
        if (!is_octahedral(entry.witness))
            check.violations.push_back(json{{"kind", "witness-not-octahedral"},
                                            {"k", entry.k},
                                            {"witness", io::system_to_json(entry.witness)}});
        if (!verify_bound(entry.witness))
            check.violations.push_back(json{{"kind", "witness-fails-bound"},
                                            {"k", entry.k},
                                            {"witness", io::system_to_json(entry.witness)}});
    }
    check.details["per_k"] = std::move(per_k);
    return check;
}

CheckReport run_span_equivalence(int n, std::uint64_t cases, std::uint64_t seed) {
    const std::vector<int> sizes(static_cast<std::size_t>(n), n);
    const UmbrellaBasis basis = build_umbrella_basis(n, sizes);
    const Rng master(seed);

    CheckReport check;
    check.mode = "span-equiv";
    check.details["n"] = n;
    check.details["rank"] = basis.rank;

    std::uint64_t members = 0;
    std::uint64_t nonmembers = 0;
    for (std::uint64_t i = 0; i < cases; ++i) {
        Rng rng = master.child(i);
        EdgeSpaceVector v(n, sizes);
        for (int r = 0; r < basis.rank; ++r)
            if (rng.coin()) v.xor_with(basis.reduced[r]);

        const bool perturb = (i % 2) == 1;  // half members, half single-edge flips
        if (perturb) {
            v.flip_bit(rng.below(v.bit_count()));
            ++nonmembers;
        } else {
            ++members;
        }

        const bool member = in_span(v, basis);
        const bool parity = is_octahedral(v.to_system());
        if (member != parity)
            check.violations.push_back(json{{"kind", "disagreement"},
                                            {"case", i},
                                            {"in_span", member},
                                            {"is_octahedral", parity},
                                            {"system", io::system_to_json(v.to_system())}});
        if (!perturb && !member)
            check.violations.push_back(json{{"kind", "member-not-in-span"},
                                            {"case", i},
                                            {"system", io::system_to_json(v.to_system())}});
        if (perturb && member)
            check.violations.push_back(json{{"kind", "perturbed-still-in-span"},
                                            {"case", i},
                                            {"system", io::system_to_json(v.to_system())}});
        ++check.checked;
    }
    check.details["members"] = members;
    check.details["nonmembers"] = nonmembers;
    return check;
}

CheckReport run_depth_floor(int d, std::uint64_t trials, std::uint64_t seed, int threads) {
    if (threads < 1) throw input_error("thread count must be positive");
    const Rng master(seed);
    const long long floor = static_cast<long long>(d) * d + 1;

    struct TrialOutcome {
        long long depth = 0;
        bool parity_ok = true;
        bool covered_ok = true;
        std::uint64_t config_seed = 0;
    };
    std::vector<TrialOutcome> outcomes(trials);

    auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t t = begin; t < end; ++t) {
            const std::uint64_t config_seed = master.child(t).next_u64();
            const ColourfulConfiguration config = generate_configuration(d, config_seed);
            const DepthReport report = induced_octahedral_system(config);
            TrialOutcome& out = outcomes[t];
            out.config_seed = config_seed;
            out.depth = report.depth;
            out.parity_ok = is_octahedral(report.induced_system);
            out.covered_ok =
                coverage(report.induced_system).covered_count() == d + 1;
        }
    };

    const int workers = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), trials ? trials : 1));
    if (workers <= 1) {
        run_range(0, trials);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (trials + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const std::uint64_t begin = std::min<std::uint64_t>(trials, w * chunk);
            const std::uint64_t end = std::min<std::uint64_t>(trials, begin + chunk);
            if (begin < end) pool.emplace_back([&, begin, end] { run_range(begin, end); });
        }
        for (std::thread& t : pool) t.join();
    }

    CheckReport check;
    check.mode = "depth-floor";
    check.checked = trials;
    long long min_depth = -1;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const TrialOutcome& out = outcomes[t];
        if (min_depth < 0 || out.depth < min_depth) min_depth = out.depth;
        if (out.depth < floor)
            check.violations.push_back(json{{"kind", "below-floor"},
                                            {"trial", t},
                                            {"config_seed", out.config_seed},
                                            {"depth", out.depth},
                                            {"floor", floor}});
        if (!out.parity_ok)
            check.violations.push_back(json{{"kind", "induced-system-not-octahedral"},
                                            {"trial", t},
                                            {"config_seed", out.config_seed}});
        if (!out.covered_ok)
            check.violations.push_back(json{{"kind", "class-not-covered"},
                                            {"trial", t},
                                            {"config_seed", out.config_seed}});
    }
    check.details["d"] = d;
    check.details["floor"] = floor;
    check.details["min_depth"] = min_depth;
    return check;
}

CheckReport run_decomposition_roundtrip(int n, std::uint64_t trials, std::uint64_t seed) {
    const std::vector<int> sizes(static_cast<std::size_t>(n), n);
    const Rng master(seed);

    CheckReport check;
    check.mode = "decomposition";
    check.details["n"] = n;

    std::uint64_t nonempty = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng = master.child(t);
        const int count = 1 + static_cast<int>(rng.below(2 * static_cast<std::uint64_t>(n)));
        std::vector<Umbrella> picked;
        picked.reserve(count);
        for (int i = 0; i < count; ++i) {
            Umbrella u;
            u.colour = 1 + static_cast<int>(rng.below(n));
            for (int c = 0; c < n - 1; ++c)
                u.transversal.push_back(1 + static_cast<int>(rng.below(n)));
            picked.push_back(std::move(u));
        }
        const OctahedralSystem os = recompose_umbrellas(picked, n, sizes);
        ++check.checked;

        const std::vector<Umbrella> decomposition = umbrella_decomposition(os);
        const OctahedralSystem recomposed = recompose_umbrellas(decomposition, n, sizes);
        if (!(recomposed == os)) {
            check.violations.push_back(json{{"kind", "recomposition-mismatch"},
                                            {"trial", t},
                                            {"system", io::system_to_json(os)}});
            continue;
        }
        const CoverageReport cov = coverage(os);
        for (const Umbrella& u : decomposition)
            if (!cov.is_covered(u.colour)) {
                check.violations.push_back(json{{"kind", "uncovered-colour-in-decomposition"},
                                                {"trial", t},
                                                {"colour", u.colour},
                                                {"system", io::system_to_json(os)}});
                break;
            }

        if (os.empty()) continue;
        ++nonempty;
        const SuitableDecomposition sd = suitable_decomposition(os);
        std::string why;
        if (!verify_suitable_decomposition(os, sd, &why))
            check.violations.push_back(json{{"kind", "suitable-decomposition-invalid"},
                                            {"trial", t},
                                            {"why", why},
                                            {"system", io::system_to_json(os)}});
    }
    check.details["nonempty"] = nonempty;
    return check;
}

CheckReport run_predicate_crosscheck(int d_max, std::uint64_t cases, std::uint64_t seed) {
    if (d_max < 1) throw input_error("d_max must be at least 1");
    const Rng master(seed);
    constexpr long kGrid = 65536;

    CheckReport check;
    check.mode = "predicate-crosscheck";
    check.details["d_max"] = d_max;

    for (std::uint64_t i = 0; i < cases; ++i) {
        Rng rng = master.child(i);
        const int d = 1 + static_cast<int>(i % static_cast<std::uint64_t>(d_max));
        std::vector<Point> points(d + 1);
        for (Point& p : points) {
            p.resize(d);
            for (int r = 0; r < d; ++r) {
                Rational coord(static_cast<long>(rng.int_in(-kGrid, kGrid)), kGrid);
                coord.canonicalize();
                p[r] = std::move(coord);
            }
        }
        ++check.checked;

        const auto record = [&](const char* kind, const json& extra = json::object()) {
            json v{{"kind", kind}, {"case", i}, {"d", d}, {"points", points_to_json(points)}};
            for (auto it = extra.begin(); it != extra.end(); ++it) v[it.key()] = it.value();
            check.violations.push_back(std::move(v));
        };

        const auto solved = classify_by_solve(points, d);
        const ContainmentResult feas = classify_by_feasibility(points, d);

        if (solved) {
            if (solved->status != feas.status)
                record("status-disagreement", json{{"solve", to_string(solved->status)},
                                                   {"feasibility", to_string(feas.status)}});
            if (solved->contains != feas.contains) record("containment-disagreement");
            if (solved->contains && feas.contains &&
                solved->coefficients != feas.coefficients)
                record("coefficient-disagreement");
        } else if (feas.status != Containment::degenerate) {
            record("dependency-disagreement", json{{"feasibility", to_string(feas.status)}});
        }

        if (!certificate_valid(points, d, feas)) record("feasibility-certificate-invalid");
        const ContainmentResult full = contains_origin(points, d);
        if (!certificate_valid(points, d, full)) record("dispatch-certificate-invalid");
        if (full.contains != feas.contains) record("dispatch-containment-disagreement");
    }
    return check;
}

}  // namespace octa::verify
