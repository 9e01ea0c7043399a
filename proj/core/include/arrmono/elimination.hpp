#pragma once

#include "arrmono/matrix.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace arrmono {

template <>
struct RingTraits<Integer> {
    static constexpr const char* tag = "integer";
    static Integer one_like(const Integer&) { return Integer(1); }
    static std::size_t nvars(const Integer&) { return 0; }
    static bool is_zero(const Integer& z) { return z == 0; }
};

// Result of fraction-free Gauss-Jordan elimination. Every pivot entry of
// `reduced` equals `scale` (the determinant of the pivot minor, up to the sign
// of the row permutation); the remaining rows are zero in the pivoted columns.
template <class T>
struct FractionFreeForm {
    Matrix<T> reduced;
    std::vector<std::size_t> pivot_cols;
    T scale;
    int row_swap_sign = 1;

    std::size_t rank() const { return pivot_cols.size(); }
};

// Fraction-free (Bareiss) Gauss-Jordan over Z, pivoting only within the first
// `pivot_limit` columns. Intermediate entries are minors of the input, so all
// divisions are exact.
FractionFreeForm<Integer> fraction_free_gauss_jordan(Matrix<Integer> m, std::size_t pivot_limit);
// Same over Q[y]; exact divisions are multivariate polynomial divisions.
FractionFreeForm<MultiPoly> fraction_free_gauss_jordan(Matrix<MultiPoly> m, std::size_t pivot_limit);

// Rank and determinant of rational matrices via Bareiss on denominator-cleared
// integer rows.
std::size_t rank(const Matrix<Rational>& m);
Rational determinant(const Matrix<Rational>& m);

// Exact symbolic rank over the fraction field Q(y).
std::size_t symbolic_rank(const Matrix<MultiPoly>& m);
std::size_t symbolic_rank(const Matrix<LaurentPoly>& m);

template <class T>
std::size_t rank_at(const Matrix<T>& m, std::span<const Rational> point) {
    if constexpr (std::is_same_v<T, Rational>)
        return rank(m);
    else
        return rank(evaluate(m, point));
}

// Rank over the fraction field: rank at two seeded random rational points; when
// they disagree the symbolic elimination decides.
std::size_t generic_rank(const Matrix<MultiPoly>& m, std::uint64_t seed = 1);
std::size_t generic_rank(const Matrix<LaurentPoly>& m, std::uint64_t seed = 1);

// Solution of A * X = B over the fraction field of T's ring. X = numerator /
// denominator entrywise, with free variables set to zero; `kernel` holds a
// basis of the right kernel of A as columns with denominators cleared. When
// every entry of X lies in the ring, `in_ring` is set and `solution` holds it.
template <class T>
struct SolveResult {
    Matrix<T> numerator;
    T denominator;
    std::vector<Matrix<T>> kernel;
    bool in_ring = false;
    std::optional<Matrix<T>> solution;

    std::size_t kernel_dimension() const { return kernel.size(); }
};

// Throws NoSolution when the system is inconsistent.
SolveResult<Rational> solve_right(const Matrix<Rational>& a, const Matrix<Rational>& b);
SolveResult<MultiPoly> solve_right(const Matrix<MultiPoly>& a, const Matrix<MultiPoly>& b);
SolveResult<LaurentPoly> solve_right(const Matrix<LaurentPoly>& a, const Matrix<LaurentPoly>& b);

// Basis of {v : A v = 0} as the columns of the returned matrix.
Matrix<Rational> right_kernel(const Matrix<Rational>& a);
// Basis of {v : v A = 0} as the rows of the returned matrix.
Matrix<Rational> left_kernel(const Matrix<Rational>& a);
// A maximal linearly independent subset of the rows of a, in order.
Matrix<Rational> independent_rows(const Matrix<Rational>& a);

// Stacks rows of b under a (equal column counts).
template <class T>
Matrix<T> stack_rows(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.cols() && a.rows() && b.rows()) throw ShapeMismatch("stack " + a.shape() + " on " + b.shape());
    std::size_t cols = a.rows() ? a.cols() : b.cols();
    Matrix<T> r(a.rows() + b.rows(), cols, a.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < cols; ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < cols; ++j) r(a.rows() + i, j) = b(i, j);
    return r;
}

// I + M + M^2/2 + ... truncated beyond total degree cap. Entries of M must
// have zero constant term (NonzeroConstantTerm otherwise).
Matrix<TruncatedSeries> mat_exp_truncated(const Matrix<MultiPoly>& m, int cap = kDefaultSeriesCap);

} // namespace arrmono
