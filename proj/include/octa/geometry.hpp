#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "octa/linsolve.hpp"
#include "octa/octahedral.hpp"
#include "octa/rational.hpp"
#include "octa/rng.hpp"

namespace octa {

using Point = std::vector<Rational>;  // d exact coordinates

// d+1 colour classes of points in R^d.
struct ColourfulConfiguration {
    int d = 0;
    std::vector<std::vector<Point>> colours;  // d+1 lists

    friend bool operator==(const ColourfulConfiguration&, const ColourfulConfiguration&) = default;
};

void validate_configuration(const ColourfulConfiguration& config);

enum class Containment { inside, boundary, outside, degenerate };

const char* to_string(Containment c);

// Exact classification of the origin against the convex hull of d+1
// points, with a certificate that re-verifies by arithmetic alone:
// barycentric coefficients when the origin is in the hull, a functional
// strictly positive on every point when it is not, and a nonzero affine
// dependency whenever the points are affinely dependent.
struct ContainmentResult {
    Containment status = Containment::outside;
    bool contains = false;                 // closed containment
    std::vector<Rational> coefficients;    // inside/boundary (unique), degenerate witness
    std::vector<Rational> functional;      // outside certificate
    std::vector<Rational> dependency;      // degenerate certificate
};

// Linear-solve route: unique barycentric coordinates via fraction-free
// elimination. Returns nullopt for affinely dependent point sets; the
// outside case carries no functional (the caller obtains one from the
// feasibility route).
std::optional<ContainmentResult> classify_by_solve(const std::vector<Point>& points, int d);

// Feasibility route: exact phase-1 simplex on {l >= 0, sum l = 1,
// sum l p = 0}. Decides closed containment for any point set and carries
// full certificates.
ContainmentResult classify_by_feasibility(const std::vector<Point>& points, int d);

// Dispatcher used by everything else: linear solve first, feasibility for
// the degenerate and outside-certificate cases. Routes agree wherever
// both apply; disagreement raises internal_error.
ContainmentResult contains_origin(const std::vector<Point>& points, int d);

// Status-only variant without certificate construction; the enumeration
// hot path.
std::pair<Containment, bool> classify_origin(const std::vector<Point>& points, int d);

// True iff every certificate field of `result` re-verifies against the
// points by exact arithmetic.
bool certificate_valid(const std::vector<Point>& points, int d, const ContainmentResult& result);

struct DepthReport {
    long long depth = 0;             // closed containment count
    long long boundary_count = 0;
    long long degenerate_count = 0;  // affinely dependent simplices seen
    OctahedralSystem induced_system;
};

// Enumerates every full colourful simplex (one point per colour); an edge
// joins the induced system exactly when the simplex contains the origin.
DepthReport induced_octahedral_system(const ColourfulConfiguration& config, int threads = 1);

long long colourful_depth(const ColourfulConfiguration& config, int threads = 1);

// Grid rejection sampler: coordinates uniform on the 2^-16 grid over
// [-1,1]^d, a colour is accepted once the origin lies in its convex hull,
// and whole configurations are redrawn until every simplex classifies
// strictly inside or outside. Deterministic per seed.
ColourfulConfiguration generate_configuration(int d, std::uint64_t seed, int colour_size = 0);

// 0 in conv(points), decided by the feasibility route.
bool origin_in_hull(const std::vector<Point>& points, int d);

struct SearchResult {
    ColourfulConfiguration configuration;
    long long depth = 0;
};

// Greedy descent over single-point replacements that keep the colour
// feasible and the configuration generic, restarting from a fresh
// configuration after 500 non-improving proposals. Depths below d^2+1
// would contradict the proven floor and raise internal_error.
SearchResult minimize_depth_search(int d, std::uint64_t iterations, std::uint64_t seed);

// Scales every point of one colour (1-based) by a positive factor.
ColourfulConfiguration scale_colour(const ColourfulConfiguration& config, int colour_index,
                                    const Rational& factor);

}  // namespace octa
