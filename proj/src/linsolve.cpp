#include "octa/linsolve.hpp"

#include <algorithm>

#include "octa/errors.hpp"

namespace octa {

namespace {

// Denominator-cleared copy of [a | b]; row scaling leaves the solution set
// of A x = b untouched.
std::vector<std::vector<BigInt>> integer_rows(const RationalMatrix& a, const RationalVector& b) {
    const std::size_t rows = a.size();
    std::vector<std::vector<BigInt>> out(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        BigInt scale = b[r].get_den();
        for (const Rational& v : a[r]) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den().get_mpz_t());
        out[r].reserve(a[r].size() + 1);
        for (const Rational& v : a[r]) out[r].push_back(BigInt(v.get_num() * (scale / v.get_den())));
        out[r].push_back(BigInt(b[r].get_num() * (scale / b[r].get_den())));
    }
    return out;
}

}  // namespace

std::optional<RationalVector> solve_square(const RationalMatrix& a, const RationalVector& b) {
    const int m = static_cast<int>(a.size());
    if (m == 0 || b.size() != a.size()) throw input_error("bad linear system shape");
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != m) throw input_error("matrix is not square");

    std::vector<std::vector<BigInt>> t = integer_rows(a, b);

    // Bareiss elimination with row pivoting; entries stay minors of the
    // row-permuted matrix, so the divisions are exact.
    BigInt prev(1);
    for (int k = 0; k < m; ++k) {
        int pivot = -1;
        for (int r = k; r < m; ++r)
            if (t[r][k] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return std::nullopt;
        std::swap(t[k], t[pivot]);
        for (int r = k + 1; r < m; ++r) {
            for (int c = k + 1; c <= m; ++c) {
                BigInt v = t[k][k] * t[r][c] - t[r][k] * t[k][c];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                t[r][c] = std::move(v);
            }
            t[r][k] = 0;
        }
        prev = t[k][k];
    }

    RationalVector x(m);
    for (int r = m - 1; r >= 0; --r) {
        Rational acc(t[r][m]);
        for (int c = r + 1; c < m; ++c) acc -= Rational(t[r][c]) * x[c];
        x[r] = acc / Rational(t[r][r]);
    }
    return x;
}

std::optional<RationalVector> kernel_vector(const RationalMatrix& a) {
    if (a.empty()) throw input_error("empty matrix");
    const int rows = static_cast<int>(a.size());
    const int cols = static_cast<int>(a[0].size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != cols) throw input_error("ragged matrix");

    RationalMatrix t = a;
    std::vector<int> pivot_col_of_row;
    std::vector<bool> col_is_pivot(cols, false);

    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int r = row; r < rows; ++r)
            if (t[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(t[row], t[pivot]);
        const Rational inv = t[row][col];
        for (int c = col; c < cols; ++c) t[row][c] /= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || t[r][col] == 0) continue;
            const Rational factor = t[r][col];
            for (int c = col; c < cols; ++c) t[r][c] -= factor * t[row][c];
        }
        pivot_col_of_row.push_back(col);
        col_is_pivot[col] = true;
        ++row;
    }

    int free_col = -1;
    for (int c = 0; c < cols; ++c)
        if (!col_is_pivot[c]) {
            free_col = c;
            break;
        }
    if (free_col < 0) return std::nullopt;

    RationalVector alpha(cols, Rational(0));
    alpha[free_col] = 1;
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
        alpha[pivot_col_of_row[r]] = -t[r][free_col];
    return alpha;
}

FeasibilityResult lp_feasible(const RationalMatrix& a, const RationalVector& b) {
    const int rows = static_cast<int>(a.size());
    if (rows == 0 || b.size() != a.size()) throw input_error("bad LP shape");
    const int cols = static_cast<int>(a[0].size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != cols) throw input_error("ragged LP matrix");

    // Phase-1 tableau over [A | I] with artificial basis; rows flipped to
    // make the right-hand side nonnegative.
    std::vector<int> row_sign(rows, 1);
    RationalMatrix t(rows, RationalVector(cols + rows, Rational(0)));
    RationalVector rhs(rows);
    for (int r = 0; r < rows; ++r) {
        const bool flip = sgn(b[r]) < 0;
        row_sign[r] = flip ? -1 : 1;
        for (int c = 0; c < cols; ++c) t[r][c] = flip ? Rational(-a[r][c]) : a[r][c];
        t[r][cols + r] = 1;
        rhs[r] = flip ? Rational(-b[r]) : b[r];
    }

    std::vector<int> basis(rows);
    RationalVector dvec(cols + rows, Rational(0));
    for (int r = 0; r < rows; ++r) {
        basis[r] = cols + r;
        for (int c = 0; c < cols + rows; ++c) dvec[c] -= t[r][c];
    }
    for (int r = 0; r < rows; ++r) dvec[cols + r] += 1;  // artificial costs

    for (;;) {
        int entering = -1;
        for (int c = 0; c < cols + rows; ++c)
            if (sgn(dvec[c]) < 0) {
                entering = c;
                break;
            }
        if (entering < 0) break;

        int leaving = -1;
        Rational best_ratio;
        for (int r = 0; r < rows; ++r) {
            if (sgn(t[r][entering]) <= 0) continue;
            Rational ratio = rhs[r] / t[r][entering];
            if (leaving < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[r] < basis[leaving])) {
                leaving = r;
                best_ratio = ratio;
            }
        }
        if (leaving < 0)
            throw internal_error("phase-1 simplex unbounded; objective is bounded below by zero");

        const Rational pivot = t[leaving][entering];
        for (int c = 0; c < cols + rows; ++c) t[leaving][c] /= pivot;
        rhs[leaving] /= pivot;
        for (int r = 0; r < rows; ++r) {
            if (r == leaving || t[r][entering] == 0) continue;
            const Rational factor = t[r][entering];
            for (int c = 0; c < cols + rows; ++c) t[r][c] -= factor * t[leaving][c];
            rhs[r] -= factor * rhs[leaving];
        }
        const Rational dfactor = dvec[entering];
        if (dfactor != 0)
            for (int c = 0; c < cols + rows; ++c) dvec[c] -= dfactor * t[leaving][c];
        basis[leaving] = entering;
    }

    Rational value(0);  // optimal phase-1 objective: rhs mass still on artificials
    for (int r = 0; r < rows; ++r)
        if (basis[r] >= cols) value += rhs[r];

    FeasibilityResult result;
    if (value == 0) {
        result.feasible = true;
        result.point.assign(cols, Rational(0));
        for (int r = 0; r < rows; ++r)
            if (basis[r] < cols) result.point[basis[r]] = rhs[r];
        // Verify A x = b, x >= 0.
        for (const Rational& xi : result.point)
            if (sgn(xi) < 0) throw internal_error("simplex returned a negative coordinate");
        for (int r = 0; r < rows; ++r) {
            Rational acc(0);
            for (int c = 0; c < cols; ++c) acc += a[r][c] * result.point[c];
            if (acc != b[r]) throw internal_error("simplex witness does not satisfy A x = b");
        }
    } else {
        result.feasible = false;
        result.farkas.assign(rows, Rational(0));
        for (int r = 0; r < rows; ++r) {
            // Reduced cost of artificial r is 1 - y_r in the flipped system.
            Rational y = Rational(1) - dvec[cols + r];
            result.farkas[r] = row_sign[r] < 0 ? Rational(-y) : y;
        }
        // Verify yT A <= 0 and yT b > 0.
        for (int c = 0; c < cols; ++c) {
            Rational acc(0);
            for (int r = 0; r < rows; ++r) acc += result.farkas[r] * a[r][c];
            if (sgn(acc) > 0) throw internal_error("Farkas certificate fails yT A <= 0");
        }
        Rational acc(0);
        for (int r = 0; r < rows; ++r) acc += result.farkas[r] * b[r];
        if (sgn(acc) <= 0) throw internal_error("Farkas certificate fails yT b > 0");
    }
    return result;
}

}  // namespace octa
