#pragma once

#include <optional>
#include <vector>

#include "octa/rational.hpp"

namespace octa {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<std::vector<Rational>>;  // row major

// Solves A x = b for square A by fraction-free (Bareiss) elimination on
// the denominator-cleared integer system. Returns nullopt when A is
// singular.
std::optional<RationalVector> solve_square(const RationalMatrix& a, const RationalVector& b);

// A nonzero vector of the kernel of A (columns >= 1), or nullopt when the
// columns are linearly independent.
std::optional<RationalVector> kernel_vector(const RationalMatrix& a);

// Exact phase-1 simplex for {x >= 0 : A x = b} with Bland's rule.
struct FeasibilityResult {
    bool feasible = false;
    RationalVector point;    // feasible: x with A x = b, x >= 0
    RationalVector farkas;   // infeasible: y with yT A <= 0 and yT b > 0
};

FeasibilityResult lp_feasible(const RationalMatrix& a, const RationalVector& b);

}  // namespace octa
