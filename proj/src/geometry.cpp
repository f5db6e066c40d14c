#include "octa/geometry.hpp"

#include <algorithm>
#include <thread>

#include "octa/errors.hpp"

namespace octa {

namespace {

constexpr long kGridDenominator = 65536;  // 2^16
constexpr int kColourAttemptCap = 10'000;
constexpr int kConfigAttemptCap = 200;
constexpr int kStagnationLimit = 500;

void validate_points(const std::vector<Point>& points, int d) {
    for (const Point& p : points)
        if (static_cast<int>(p.size()) != d)
            throw input_error("point has " + std::to_string(p.size()) +
                              " coordinates, expected " + std::to_string(d));
}

void require_simplex_arity(const std::vector<Point>& points, int d) {
    if (d < 1) throw input_error("dimension must be at least 1");
    if (static_cast<int>(points.size()) != d + 1)
        throw input_error("expected " + std::to_string(d + 1) + " points, got " +
                          std::to_string(points.size()));
    validate_points(points, d);
}

// Columns are (p_j, 1); the system M l = (0,...,0,1) encodes sum l p = 0,
// sum l = 1.
RationalMatrix homogeneous_matrix(const std::vector<Point>& points, int d) {
    RationalMatrix m(d + 1, RationalVector(points.size(), Rational(0)));
    for (std::size_t j = 0; j < points.size(); ++j) {
        for (int r = 0; r < d; ++r) m[r][j] = points[j][r];
        m[d][j] = 1;
    }
    return m;
}

RationalVector homogeneous_rhs(int d) {
    RationalVector b(d + 1, Rational(0));
    b[d] = 1;
    return b;
}

Containment status_from_coefficients(const RationalVector& lambda) {
    bool any_zero = false;
    for (const Rational& l : lambda) {
        const int s = sgn(l);
        if (s < 0) return Containment::outside;
        if (s == 0) any_zero = true;
    }
    return any_zero ? Containment::boundary : Containment::inside;
}

std::vector<Rational> functional_from_farkas(const RationalVector& farkas, int d) {
    std::vector<Rational> f(d);
    for (int r = 0; r < d; ++r) f[r] = -farkas[r];
    return f;
}

}  // namespace

const char* to_string(Containment c) {
    switch (c) {
        case Containment::inside: return "inside";
        case Containment::boundary: return "boundary";
        case Containment::outside: return "outside";
        case Containment::degenerate: return "degenerate";
    }
    return "?";
}

void validate_configuration(const ColourfulConfiguration& config) {
    if (config.d < 1) throw input_error("dimension must be at least 1");
    if (static_cast<int>(config.colours.size()) != config.d + 1)
        throw input_error("expected " + std::to_string(config.d + 1) + " colours, got " +
                          std::to_string(config.colours.size()));
    for (const auto& colour : config.colours) {
        if (colour.empty()) throw input_error("empty colour class");
        validate_points(colour, config.d);
    }
}

std::optional<ContainmentResult> classify_by_solve(const std::vector<Point>& points, int d) {
    require_simplex_arity(points, d);
    auto lambda = solve_square(homogeneous_matrix(points, d), homogeneous_rhs(d));
    if (!lambda) return std::nullopt;

    ContainmentResult result;
    result.status = status_from_coefficients(*lambda);
    result.contains = result.status != Containment::outside;
    if (result.contains) result.coefficients = std::move(*lambda);
    return result;
}

ContainmentResult classify_by_feasibility(const std::vector<Point>& points, int d) {
    if (d < 1) throw input_error("dimension must be at least 1");
    validate_points(points, d);
    const RationalMatrix m = homogeneous_matrix(points, d);
    const FeasibilityResult feas = lp_feasible(m, homogeneous_rhs(d));
    auto dependency = kernel_vector(m);

    ContainmentResult result;
    result.contains = feas.feasible;
    if (dependency) {
        result.status = Containment::degenerate;
        result.dependency = std::move(*dependency);
        if (feas.feasible)
            result.coefficients = feas.point;
        else
            result.functional = functional_from_farkas(feas.farkas, d);
    } else if (feas.feasible) {
        result.status = status_from_coefficients(feas.point);
        result.coefficients = feas.point;
    } else {
        result.status = Containment::outside;
        result.functional = functional_from_farkas(feas.farkas, d);
    }
    return result;
}

ContainmentResult contains_origin(const std::vector<Point>& points, int d) {
    require_simplex_arity(points, d);
    auto solved = classify_by_solve(points, d);
    if (!solved) {
        ContainmentResult result = classify_by_feasibility(points, d);
        OCTA_CHECK(result.status == Containment::degenerate,
                   "singular solve but feasibility route found the points independent");
        return result;
    }
    if (solved->status == Containment::outside) {
        ContainmentResult viaLp = classify_by_feasibility(points, d);
        OCTA_CHECK(viaLp.status == Containment::outside,
                   "solve route says outside, feasibility route disagrees");
        return viaLp;
    }
    return *solved;
}

std::pair<Containment, bool> classify_origin(const std::vector<Point>& points, int d) {
    require_simplex_arity(points, d);
    auto lambda = solve_square(homogeneous_matrix(points, d), homogeneous_rhs(d));
    if (lambda) {
        const Containment status = status_from_coefficients(*lambda);
        return {status, status != Containment::outside};
    }
    const FeasibilityResult feas = lp_feasible(homogeneous_matrix(points, d), homogeneous_rhs(d));
    return {Containment::degenerate, feas.feasible};
}

bool certificate_valid(const std::vector<Point>& points, int d, const ContainmentResult& result) {
    if (static_cast<int>(points.size()) < 1) return false;

    const auto combination_checks = [&](const std::vector<Rational>& lambda,
                                        bool require_strict) {
        if (lambda.size() != points.size()) return false;
        Rational total(0);
        bool any_zero = false;
        for (const Rational& l : lambda) {
            const int s = sgn(l);
            if (s < 0) return false;
            if (s == 0) any_zero = true;
            total += l;
        }
        if (total != 1) return false;
        if (require_strict && any_zero) return false;
        for (int r = 0; r < d; ++r) {
            Rational acc(0);
            for (std::size_t j = 0; j < points.size(); ++j) acc += lambda[j] * points[j][r];
            if (acc != 0) return false;
        }
        return true;
    };

    switch (result.status) {
        case Containment::inside:
            return result.contains && combination_checks(result.coefficients, true);
        case Containment::boundary: {
            if (!result.contains || !combination_checks(result.coefficients, false)) return false;
            bool any_zero = false;
            for (const Rational& l : result.coefficients) any_zero |= sgn(l) == 0;
            return any_zero;
        }
        case Containment::outside: {
            if (result.contains || result.functional.size() != static_cast<std::size_t>(d))
                return false;
            for (const Point& p : points) {
                Rational acc(0);
                for (int r = 0; r < d; ++r) acc += result.functional[r] * p[r];
                if (sgn(acc) <= 0) return false;
            }
            return true;
        }
        case Containment::degenerate: {
            if (result.dependency.size() != points.size()) return false;
            bool nonzero = false;
            Rational total(0);
            for (const Rational& a : result.dependency) {
                nonzero |= sgn(a) != 0;
                total += a;
            }
            if (!nonzero || total != 0) return false;
            for (int r = 0; r < d; ++r) {
                Rational acc(0);
                for (std::size_t j = 0; j < points.size(); ++j)
                    acc += result.dependency[j] * points[j][r];
                if (acc != 0) return false;
            }
            if (result.contains) return combination_checks(result.coefficients, false);
            if (result.functional.size() != static_cast<std::size_t>(d)) return false;
            for (const Point& p : points) {
                Rational acc(0);
                for (int r = 0; r < d; ++r) acc += result.functional[r] * p[r];
                if (sgn(acc) <= 0) return false;
            }
            return true;
        }
    }
    return false;
}

namespace {

struct TupleWalker {
    std::vector<int> sizes;
    std::vector<int> current;  // 0-based

    explicit TupleWalker(const std::vector<int>& s) : sizes(s), current(s.size(), 0) {}

    void seek(std::uint64_t flat) {
        for (int c = static_cast<int>(sizes.size()) - 1; c >= 0; --c) {
            current[c] = static_cast<int>(flat % sizes[c]);
            flat /= sizes[c];
        }
    }

    void advance() {
        for (int c = static_cast<int>(sizes.size()) - 1; c >= 0; --c) {
            if (++current[c] < sizes[c]) return;
            current[c] = 0;
        }
    }
};

std::vector<Point> gather(const ColourfulConfiguration& config, const std::vector<int>& tuple) {
    std::vector<Point> points;
    points.reserve(tuple.size());
    for (std::size_t c = 0; c < tuple.size(); ++c) points.push_back(config.colours[c][tuple[c]]);
    return points;
}

struct EnumerationSlice {
    std::vector<Edge> edges;
    long long boundary = 0;
    long long degenerate = 0;
};

}  // namespace

DepthReport induced_octahedral_system(const ColourfulConfiguration& config, int threads) {
    validate_configuration(config);
    for (const auto& colour : config.colours)
        if (colour.size() < 2) throw input_error("induced system needs colour sizes >= 2");
    if (threads < 1) throw input_error("thread count must be positive");

    const int n = config.d + 1;
    std::vector<int> sizes(n);
    std::uint64_t total = 1;
    for (int c = 0; c < n; ++c) {
        sizes[c] = static_cast<int>(config.colours[c].size());
        total *= static_cast<std::uint64_t>(sizes[c]);
    }

    const int workers = static_cast<int>(std::min<std::uint64_t>(threads, total));
    std::vector<EnumerationSlice> slices(workers);
    const std::uint64_t chunk = (total + workers - 1) / workers;

    auto run_slice = [&](std::uint64_t begin, std::uint64_t end, EnumerationSlice& slice) {
        TupleWalker walker(sizes);
        walker.seek(begin);
        for (std::uint64_t idx = begin; idx < end; ++idx, walker.advance()) {
            const auto [status, contains] = classify_origin(gather(config, walker.current), config.d);
            if (status == Containment::boundary) ++slice.boundary;
            if (status == Containment::degenerate) ++slice.degenerate;
            if (contains) {
                Edge e(n);
                for (int c = 0; c < n; ++c) e[c] = walker.current[c] + 1;
                slice.edges.push_back(std::move(e));
            }
        }
    };

    if (workers == 1) {
        run_slice(0, total, slices[0]);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            const std::uint64_t begin = std::min<std::uint64_t>(total, w * chunk);
            const std::uint64_t end = std::min<std::uint64_t>(total, begin + chunk);
            pool.emplace_back([&, w, begin, end] { run_slice(begin, end, slices[w]); });
        }
        for (std::thread& t : pool) t.join();
    }

    DepthReport report;
    std::vector<Edge> edges;
    for (EnumerationSlice& slice : slices) {
        report.boundary_count += slice.boundary;
        report.degenerate_count += slice.degenerate;
        edges.insert(edges.end(), std::make_move_iterator(slice.edges.begin()),
                     std::make_move_iterator(slice.edges.end()));
    }
    report.depth = static_cast<long long>(edges.size());
    report.induced_system = OctahedralSystem(n, sizes, std::move(edges));

#if defined(OCTA_ENABLE_CHECKS)
    // Octahedron Lemma; parity of the induced edge set needs the
    // configuration to classify strictly everywhere.
    if (report.boundary_count == 0 && report.degenerate_count == 0 && total <= (1u << 20))
        OCTA_CHECK(!parity_violation_by_difference(report.induced_system).has_value(),
                   "induced system of a generic configuration violates parity");
#endif
    return report;
}

long long colourful_depth(const ColourfulConfiguration& config, int threads) {
    return induced_octahedral_system(config, threads).depth;
}

bool origin_in_hull(const std::vector<Point>& points, int d) {
    if (points.empty()) return false;
    validate_points(points, d);
    return lp_feasible(homogeneous_matrix(points, d), homogeneous_rhs(d)).feasible;
}

namespace {

Point sample_grid_point(Rng& rng, int d) {
    Point p(d);
    for (int r = 0; r < d; ++r) {
        const long numerator = static_cast<long>(rng.int_in(-kGridDenominator, kGridDenominator));
        Rational coord(numerator, kGridDenominator);
        coord.canonicalize();
        p[r] = std::move(coord);
    }
    return p;
}

bool configuration_generic(const ColourfulConfiguration& config) {
    std::vector<int> sizes;
    std::uint64_t total = 1;
    for (const auto& colour : config.colours) {
        sizes.push_back(static_cast<int>(colour.size()));
        total *= colour.size();
    }
    TupleWalker walker(sizes);
    for (std::uint64_t idx = 0; idx < total; ++idx, walker.advance()) {
        const auto [status, contains] = classify_origin(gather(config, walker.current), config.d);
        if (status == Containment::boundary || status == Containment::degenerate) return false;
    }
    return true;
}

}  // namespace

ColourfulConfiguration generate_configuration(int d, std::uint64_t seed, int colour_size) {
    if (d < 1) throw input_error("dimension must be at least 1");
    if (colour_size == 0) colour_size = d + 1;
    if (colour_size < 2) throw input_error("colour size must be at least 2");

    const Rng master(seed);
    for (int attempt = 0; attempt < kConfigAttemptCap; ++attempt) {
        const Rng config_rng = master.child(attempt);
        ColourfulConfiguration config;
        config.d = d;
        config.colours.resize(d + 1);

        bool colours_ok = true;
        for (int c = 0; c <= d && colours_ok; ++c) {
            Rng colour_rng = config_rng.child(c);
            bool accepted = false;
            for (int tries = 0; tries < kColourAttemptCap; ++tries) {
                std::vector<Point> candidate;
                candidate.reserve(colour_size);
                for (int p = 0; p < colour_size; ++p) candidate.push_back(sample_grid_point(colour_rng, d));
                if (origin_in_hull(candidate, d)) {
                    config.colours[c] = std::move(candidate);
                    accepted = true;
                    break;
                }
            }
            colours_ok = accepted;
        }
        if (!colours_ok)
            throw generation_error("colour rejection cap exceeded (seed " + std::to_string(seed) +
                                   ", d " + std::to_string(d) + ")");
        if (configuration_generic(config)) return config;
    }
    throw generation_error("configuration rejection cap exceeded (seed " + std::to_string(seed) +
                           ", d " + std::to_string(d) + ")");
}

namespace {

// Flat indices of the simplices using colour c, point p; used to patch a
// status cache after a single-point replacement.
std::vector<std::uint64_t> affected_indices(const std::vector<int>& sizes, int colour, int point) {
    std::vector<int> other_sizes;
    for (std::size_t c = 0; c < sizes.size(); ++c)
        if (static_cast<int>(c) != colour) other_sizes.push_back(sizes[c]);

    std::uint64_t count = 1;
    for (int s : other_sizes) count *= static_cast<std::uint64_t>(s);

    std::vector<std::uint64_t> strides(sizes.size());
    std::uint64_t acc = 1;
    for (int c = static_cast<int>(sizes.size()) - 1; c >= 0; --c) {
        strides[c] = acc;
        acc *= static_cast<std::uint64_t>(sizes[c]);
    }

    std::vector<std::uint64_t> out;
    out.reserve(count);
    TupleWalker walker(other_sizes);
    for (std::uint64_t i = 0; i < count; ++i, walker.advance()) {
        std::uint64_t idx = strides[colour] * static_cast<std::uint64_t>(point);
        int slot = 0;
        for (std::size_t c = 0; c < sizes.size(); ++c) {
            if (static_cast<int>(c) == colour) continue;
            idx += strides[c] * static_cast<std::uint64_t>(walker.current[slot++]);
        }
        out.push_back(idx);
    }
    return out;
}

struct SearchState {
    ColourfulConfiguration config;
    std::vector<int> sizes;
    std::vector<std::pair<Containment, bool>> statuses;
    long long depth = 0;

    void rebuild() {
        sizes.clear();
        std::uint64_t total = 1;
        for (const auto& colour : config.colours) {
            sizes.push_back(static_cast<int>(colour.size()));
            total *= colour.size();
        }
        statuses.assign(total, {Containment::outside, false});
        depth = 0;
        TupleWalker walker(sizes);
        for (std::uint64_t idx = 0; idx < total; ++idx, walker.advance()) {
            statuses[idx] = classify_origin(gather(config, walker.current), config.d);
            if (statuses[idx].second) ++depth;
        }
    }
};

}  // namespace

SearchResult minimize_depth_search(int d, std::uint64_t iterations, std::uint64_t seed) {
    if (d < 1) throw input_error("dimension must be at least 1");
    const Rng master(seed);
    Rng move_rng = master.child(1);

    std::uint64_t restarts = 0;
    SearchState state;
    state.config = generate_configuration(d, master.child(0).next_u64());
    state.rebuild();

    SearchResult best{state.config, state.depth};
    int stagnation = 0;

    for (std::uint64_t iter = 0; iter < iterations; ++iter) {
        const int colour = static_cast<int>(move_rng.below(static_cast<std::uint64_t>(d) + 1));
        const int point = static_cast<int>(
            move_rng.below(static_cast<std::uint64_t>(state.sizes[colour])));
        const Point replacement = sample_grid_point(move_rng, d);

        bool improved = false;
        do {
            std::vector<Point> colour_points = state.config.colours[colour];
            colour_points[point] = replacement;
            if (!origin_in_hull(colour_points, d)) break;

            ColourfulConfiguration candidate = state.config;
            candidate.colours[colour][point] = replacement;

            const auto touched = affected_indices(state.sizes, colour, point);
            std::vector<std::pair<Containment, bool>> fresh;
            fresh.reserve(touched.size());
            long long delta = 0;
            bool generic = true;
            TupleWalker walker(state.sizes);
            for (const std::uint64_t idx : touched) {
                walker.seek(idx);
                const auto status = classify_origin(gather(candidate, walker.current), d);
                if (status.first == Containment::boundary ||
                    status.first == Containment::degenerate) {
                    generic = false;
                    break;
                }
                fresh.push_back(status);
                delta += (status.second ? 1 : 0) - (state.statuses[idx].second ? 1 : 0);
            }
            if (!generic || delta >= 0) break;

            state.config = std::move(candidate);
            for (std::size_t i = 0; i < touched.size(); ++i) state.statuses[touched[i]] = fresh[i];
            state.depth += delta;
            improved = true;
        } while (false);

        if (improved) {
            stagnation = 0;
            if (state.depth < best.depth) best = {state.config, state.depth};
        } else if (++stagnation >= kStagnationLimit) {
            stagnation = 0;
            ++restarts;
            state.config = generate_configuration(d, master.child(1 + restarts).next_u64());
            state.rebuild();
            if (state.depth < best.depth) best = {state.config, state.depth};
        }
    }

    const long long floor = static_cast<long long>(d) * d + 1;
    if (best.depth < floor)
        throw internal_error("search reached depth " + std::to_string(best.depth) +
                             " below the proven floor " + std::to_string(floor) +
                             "; containment predicate is buggy");
    return best;
}

ColourfulConfiguration scale_colour(const ColourfulConfiguration& config, int colour_index,
                                    const Rational& factor) {
    validate_configuration(config);
    if (colour_index < 1 || colour_index > config.d + 1)
        throw input_error("colour index out of range");
    if (sgn(factor) <= 0) throw input_error("scale factor must be positive");
    ColourfulConfiguration out = config;
    for (Point& p : out.colours[colour_index - 1])
        for (Rational& coord : p) coord *= factor;
    return out;
}

}  // namespace octa
