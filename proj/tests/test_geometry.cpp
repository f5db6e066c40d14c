#include <doctest.h>

#include "octa/errors.hpp"
#include "octa/geometry.hpp"
#include "octa/rng.hpp"

using namespace octa;

namespace {

Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Point pt(std::initializer_list<long> coords) {
    Point p;
    for (long c : coords) p.push_back(rat(c));
    return p;
}

}  // namespace

TEST_SUITE("geometry") {
    TEST_CASE("d=1 symmetric pair: inside with (1/2, 1/2)") {
        const std::vector<Point> points{pt({-1}), pt({1})};
        const ContainmentResult result = contains_origin(points, 1);
        CHECK(result.status == Containment::inside);
        CHECK(result.contains);
        CHECK(result.coefficients == std::vector<Rational>{rat(1, 2), rat(1, 2)});
        CHECK(certificate_valid(points, 1, result));
    }

    TEST_CASE("d=2 standard triangle: inside with thirds") {
        const std::vector<Point> points{pt({1, 0}), pt({0, 1}), pt({-1, -1})};
        const ContainmentResult result = contains_origin(points, 2);
        CHECK(result.status == Containment::inside);
        CHECK(result.coefficients ==
              std::vector<Rational>{rat(1, 3), rat(1, 3), rat(1, 3)});
        CHECK(certificate_valid(points, 2, result));
    }

    TEST_CASE("d=2 one-sided triangle: outside with a strict functional") {
        const std::vector<Point> points{pt({1, 0}), pt({2, 1}), pt({3, -1})};
        const ContainmentResult result = contains_origin(points, 2);
        CHECK(result.status == Containment::outside);
        CHECK(!result.contains);
        REQUIRE(result.functional.size() == 2);
        for (const Point& p : points) {
            Rational acc(0);
            for (int r = 0; r < 2; ++r) acc += result.functional[r] * p[r];
            CHECK(sgn(acc) > 0);
        }
        CHECK(certificate_valid(points, 2, result));
    }

    TEST_CASE("d=1 touching pair: boundary with (1, 0)") {
        const std::vector<Point> points{pt({0}), pt({1})};
        const ContainmentResult result = contains_origin(points, 1);
        CHECK(result.status == Containment::boundary);
        CHECK(result.contains);
        CHECK(result.coefficients == std::vector<Rational>{rat(1), rat(0)});
        CHECK(certificate_valid(points, 1, result));
    }

    TEST_CASE("degenerate: duplicated point away from the origin") {
        const std::vector<Point> points{pt({1, 0}), pt({1, 0}), pt({0, 1})};
        const ContainmentResult result = contains_origin(points, 2);
        CHECK(result.status == Containment::degenerate);
        CHECK(!result.contains);
        CHECK(!result.dependency.empty());
        CHECK(certificate_valid(points, 2, result));
    }

    TEST_CASE("degenerate but containing: collinear points straddling the origin") {
        const std::vector<Point> points{pt({-2, 0}), pt({1, 0}), pt({3, 0})};
        const ContainmentResult result = contains_origin(points, 2);
        CHECK(result.status == Containment::degenerate);
        CHECK(result.contains);
        CHECK(certificate_valid(points, 2, result));
    }

    TEST_CASE("solve route and feasibility route agree on the examples") {
        const std::vector<std::vector<Point>> cases{
            {pt({-1}), pt({1})},
            {pt({0}), pt({1})},
            {pt({1, 0}), pt({0, 1}), pt({-1, -1})},
            {pt({1, 0}), pt({2, 1}), pt({3, -1})},
        };
        for (const auto& points : cases) {
            const int d = static_cast<int>(points.front().size());
            const auto solved = classify_by_solve(points, d);
            REQUIRE(solved.has_value());
            const ContainmentResult feas = classify_by_feasibility(points, d);
            CHECK(solved->status == feas.status);
            CHECK(solved->contains == feas.contains);
            if (solved->contains) CHECK(solved->coefficients == feas.coefficients);
            CHECK(certificate_valid(points, d, feas));
        }
    }

    TEST_CASE("solve route declines dependent sets") {
        CHECK(!classify_by_solve({pt({1, 0}), pt({1, 0}), pt({0, 1})}, 2).has_value());
    }

    TEST_CASE("arity and dimension validation") {
        CHECK_THROWS_AS(contains_origin({pt({1}), pt({2}), pt({3})}, 1), input_error);
        CHECK_THROWS_AS(contains_origin({pt({1, 2}), pt({3})}, 1), input_error);
        CHECK_THROWS_AS(contains_origin({}, 0), input_error);
    }

    TEST_CASE("d=1 acceptance configuration: depth 2 with the crossing edges") {
        const ColourfulConfiguration config{
            1, {{pt({-1}), pt({1})}, {pt({-2}), pt({2})}}};
        const DepthReport report = induced_octahedral_system(config);
        CHECK(report.depth == 2);
        CHECK(report.boundary_count == 0);
        CHECK(report.degenerate_count == 0);
        CHECK(report.induced_system.edges() == std::vector<Edge>{{1, 2}, {2, 1}});
        CHECK(is_octahedral(report.induced_system));
        CHECK(colourful_depth(config) == 2);
    }

    TEST_CASE("d=2 repeated triangle: the six transversal tuples") {
        const std::vector<Point> triangle{pt({1, 0}), pt({0, 1}), pt({-1, -1})};
        const ColourfulConfiguration config{2, {triangle, triangle, triangle}};
        const DepthReport report = induced_octahedral_system(config);
        CHECK(report.depth == 6);
        CHECK(report.degenerate_count == 21);
        CHECK(report.boundary_count == 0);
        // Pinned from the full 27-tuple enumeration: still octahedral.
        CHECK(is_octahedral(report.induced_system));
    }

    TEST_CASE("induced enumeration is independent of the thread count") {
        const ColourfulConfiguration config = generate_configuration(2, 13);
        const DepthReport solo = induced_octahedral_system(config, 1);
        const DepthReport multi = induced_octahedral_system(config, 4);
        CHECK(solo.depth == multi.depth);
        CHECK(solo.boundary_count == multi.boundary_count);
        CHECK(solo.degenerate_count == multi.degenerate_count);
        CHECK(solo.induced_system == multi.induced_system);
    }

    TEST_CASE("generated configurations: deterministic, feasible, generic") {
        for (const std::uint64_t seed : {1ULL, 42ULL, 777ULL}) {
            const ColourfulConfiguration a = generate_configuration(2, seed);
            const ColourfulConfiguration b = generate_configuration(2, seed);
            CHECK(a == b);
            for (const auto& colour : a.colours) CHECK(origin_in_hull(colour, a.d));
            const DepthReport report = induced_octahedral_system(a);
            CHECK(report.boundary_count == 0);
            CHECK(report.degenerate_count == 0);
        }
        CHECK(!(generate_configuration(2, 1) == generate_configuration(2, 2)));
    }

    TEST_CASE("d=1 generated colours straddle the origin") {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const ColourfulConfiguration config = generate_configuration(1, seed);
            for (const auto& colour : config.colours) {
                bool nonpositive = false;
                bool nonnegative = false;
                for (const Point& p : colour) {
                    nonpositive |= sgn(p[0]) <= 0;
                    nonnegative |= sgn(p[0]) >= 0;
                }
                CHECK(nonpositive);
                CHECK(nonnegative);
            }
        }
    }

    TEST_CASE("configurable colour size") {
        const ColourfulConfiguration config = generate_configuration(2, 5, 5);
        for (const auto& colour : config.colours) CHECK(colour.size() == 5);
        CHECK_THROWS_AS(generate_configuration(2, 5, 1), input_error);
    }

    TEST_CASE("depth floor holds on generated configurations") {
        Rng rng(160);
        for (int d : {1, 2, 3}) {
            const long long floor = static_cast<long long>(d) * d + 1;
            for (int trial = 0; trial < 10; ++trial) {
                const ColourfulConfiguration config =
                    generate_configuration(d, rng.next_u64());
                const DepthReport report = induced_octahedral_system(config);
                CHECK(report.depth >= floor);
                CHECK(is_octahedral(report.induced_system));
                // Generic configurations with the origin in every hull
                // cover every class of the induced system.
                CHECK(coverage(report.induced_system).covered_count() == d + 1);
            }
        }
    }

    TEST_CASE("d=4 generated configuration clears the floor") {
        const ColourfulConfiguration config = generate_configuration(4, kDefaultSeed);
        const DepthReport report = induced_octahedral_system(config);
        CHECK(report.depth >= 17);
        CHECK(report.boundary_count == 0);
        CHECK(report.degenerate_count == 0);
        CHECK(is_octahedral(report.induced_system));
    }

    TEST_CASE("scale invariance: scaling one colour preserves the induced system") {
        Rng rng(161);
        for (int trial = 0; trial < 8; ++trial) {
            const int d = 1 + static_cast<int>(rng.below(2));
            const ColourfulConfiguration config = generate_configuration(d, rng.next_u64());
            const DepthReport before = induced_octahedral_system(config);
            const int colour = 1 + static_cast<int>(rng.below(d + 1));
            const ColourfulConfiguration scaled = scale_colour(config, colour, rat(3, 7));
            const DepthReport after = induced_octahedral_system(scaled);
            CHECK(before.induced_system == after.induced_system);
        }
        CHECK_THROWS_AS(scale_colour(generate_configuration(1, 3), 1, rat(-1)), input_error);
        CHECK_THROWS_AS(scale_colour(generate_configuration(1, 3), 5, rat(1)), input_error);
    }

    TEST_CASE("depth search reaches the floor at d=1") {
        const SearchResult result = minimize_depth_search(1, 2000, kDefaultSeed);
        CHECK(result.depth == 2);
        CHECK(colourful_depth(result.configuration) == 2);
    }

    TEST_CASE("depth search stays above the floor at d=2") {
        const SearchResult result = minimize_depth_search(2, 1500, 7);
        CHECK(result.depth >= 5);
        CHECK(colourful_depth(result.configuration) == result.depth);
    }

    TEST_CASE("search is deterministic per seed") {
        const SearchResult a = minimize_depth_search(1, 500, 99);
        const SearchResult b = minimize_depth_search(1, 500, 99);
        CHECK(a.depth == b.depth);
        CHECK(a.configuration == b.configuration);
    }
}
