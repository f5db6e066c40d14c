#include <doctest.h>

#include "octa/errors.hpp"
#include "octa/linsolve.hpp"
#include "octa/rng.hpp"

using namespace octa;

namespace {

Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

RationalMatrix random_matrix(Rng& rng, int rows, int cols) {
    RationalMatrix m(rows, RationalVector(cols));
    for (auto& row : m)
        for (auto& v : row) v = rat(rng.int_in(-20, 20), 1 + rng.below(5));
    return m;
}

}  // namespace

TEST_SUITE("linsolve") {
    TEST_CASE("solve_square on a known system") {
        // x + y = 3, x - y = 1  =>  x = 2, y = 1
        const RationalMatrix a{{rat(1), rat(1)}, {rat(1), rat(-1)}};
        const auto x = solve_square(a, {rat(3), rat(1)});
        REQUIRE(x.has_value());
        CHECK((*x)[0] == rat(2));
        CHECK((*x)[1] == rat(1));
    }

    TEST_CASE("solve_square detects singular matrices") {
        const RationalMatrix a{{rat(1), rat(2)}, {rat(2), rat(4)}};
        CHECK(!solve_square(a, {rat(1), rat(2)}).has_value());
    }

    TEST_CASE("solve_square needs a pivot swap") {
        const RationalMatrix a{{rat(0), rat(1)}, {rat(1), rat(0)}};
        const auto x = solve_square(a, {rat(5), rat(7)});
        REQUIRE(x.has_value());
        CHECK((*x)[0] == rat(7));
        CHECK((*x)[1] == rat(5));
    }

    TEST_CASE("random solutions verify against the system") {
        Rng rng(606);
        int solved = 0;
        for (int trial = 0; trial < 200; ++trial) {
            const int m = 2 + static_cast<int>(rng.below(4));
            const RationalMatrix a = random_matrix(rng, m, m);
            RationalVector b(m);
            for (auto& v : b) v = rat(rng.int_in(-20, 20), 1 + rng.below(5));
            const auto x = solve_square(a, b);
            if (!x) continue;
            ++solved;
            for (int r = 0; r < m; ++r) {
                Rational acc(0);
                for (int c = 0; c < m; ++c) acc += a[r][c] * (*x)[c];
                CHECK(acc == b[r]);
            }
        }
        CHECK(solved >= 190);
    }

    TEST_CASE("kernel_vector finds a dependency exactly when columns are dependent") {
        // Columns (1,1), (2,2) are dependent.
        const RationalMatrix dep{{rat(1), rat(2)}, {rat(1), rat(2)}};
        const auto alpha = kernel_vector(dep);
        REQUIRE(alpha.has_value());
        bool nonzero = false;
        for (const auto& v : *alpha) nonzero |= sgn(v) != 0;
        CHECK(nonzero);
        for (int r = 0; r < 2; ++r) {
            Rational acc(0);
            for (int c = 0; c < 2; ++c) acc += dep[r][c] * (*alpha)[c];
            CHECK(acc == 0);
        }

        const RationalMatrix indep{{rat(1), rat(0)}, {rat(0), rat(1)}};
        CHECK(!kernel_vector(indep).has_value());
    }

    TEST_CASE("kernel vectors annihilate random singular matrices") {
        Rng rng(707);
        for (int trial = 0; trial < 100; ++trial) {
            const int rows = 2 + static_cast<int>(rng.below(3));
            const int cols = rows + 1 + static_cast<int>(rng.below(2));
            const RationalMatrix a = random_matrix(rng, rows, cols);  // wide: kernel nonempty
            const auto alpha = kernel_vector(a);
            REQUIRE(alpha.has_value());
            bool nonzero = false;
            for (const auto& v : *alpha) nonzero |= sgn(v) != 0;
            CHECK(nonzero);
            for (int r = 0; r < rows; ++r) {
                Rational acc(0);
                for (int c = 0; c < cols; ++c) acc += a[r][c] * (*alpha)[c];
                CHECK(acc == 0);
            }
        }
    }

    TEST_CASE("lp_feasible on known feasible and infeasible systems") {
        // x1 + x2 = 1 with x >= 0: feasible.
        {
            const auto result = lp_feasible({{rat(1), rat(1)}}, {rat(1)});
            CHECK(result.feasible);
        }
        // x1 + x2 = -1 with x >= 0: infeasible.
        {
            const auto result = lp_feasible({{rat(1), rat(1)}}, {rat(-1)});
            CHECK(!result.feasible);
            REQUIRE(result.farkas.size() == 1);
        }
        // x1 - x2 = 0, x1 + x2 = 2: feasible at (1,1).
        {
            const auto result = lp_feasible({{rat(1), rat(-1)}, {rat(1), rat(1)}}, {rat(0), rat(2)});
            CHECK(result.feasible);
            CHECK(result.point[0] == rat(1));
            CHECK(result.point[1] == rat(1));
        }
        // x1 = -3 alongside x1 = 1: infeasible.
        {
            const auto result =
                lp_feasible({{rat(1), rat(0)}, {rat(1), rat(0)}}, {rat(-3), rat(1)});
            CHECK(!result.feasible);
        }
    }

    TEST_CASE("lp certificates verify on random systems") {
        // lp_feasible self-verifies and throws internal_error on a bad
        // certificate, so surviving the loop is the assertion.
        Rng rng(808);
        int feasible = 0;
        int infeasible = 0;
        for (int trial = 0; trial < 300; ++trial) {
            const int rows = 1 + static_cast<int>(rng.below(4));
            const int cols = 1 + static_cast<int>(rng.below(5));
            const RationalMatrix a = random_matrix(rng, rows, cols);
            RationalVector b(rows);
            for (auto& v : b) v = rat(rng.int_in(-10, 10), 1 + rng.below(4));
            const auto result = lp_feasible(a, b);
            (result.feasible ? feasible : infeasible) += 1;
        }
        CHECK(feasible > 0);
        CHECK(infeasible > 0);
    }

    TEST_CASE("degenerate pivoting terminates") {
        // Redundant constraints force degenerate pivots; Bland's rule must
        // still terminate.
        const RationalMatrix a{{rat(1), rat(1), rat(1)},
                               {rat(1), rat(1), rat(1)},
                               {rat(2), rat(2), rat(2)}};
        const auto result = lp_feasible(a, {rat(1), rat(1), rat(2)});
        CHECK(result.feasible);
    }
}
