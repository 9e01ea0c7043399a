#include "arrmono/elimination.hpp"

#include <numeric>
#include <random>

namespace arrmono {

namespace {

struct IntegerDomain {
    static bool is_zero(const Integer& z) { return z == 0; }
    static Integer exact_div(const Integer& a, const Integer& b) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
    static Integer one(const Integer&) { return Integer(1); }
    // Smaller magnitude pivots keep intermediate numbers small.
    static std::size_t weight(const Integer& z) { return mpz_sizeinbase(z.get_mpz_t(), 2); }
};

struct PolyDomain {
    static bool is_zero(const MultiPoly& p) { return p.is_zero(); }
    static MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
        auto q = divide_exact(a, b);
        if (!q) throw std::logic_error("fraction-free elimination produced an inexact division");
        return *q;
    }
    static MultiPoly one(const MultiPoly& z) { return MultiPoly::constant(z.nvars(), 1); }
    static std::size_t weight(const MultiPoly& p) {
        return p.size() * 64 + static_cast<std::size_t>(p.max_degree());
    }
};

template <class T, class D>
FractionFreeForm<T> gauss_jordan(Matrix<T> m, std::size_t pivot_limit) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    T prev = D::one(m.zero());
    std::vector<std::size_t> pivots;
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < std::min(pivot_limit, cols) && r < rows; ++c) {
        std::size_t best = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!D::is_zero(m(i, c)) && (best == rows || D::weight(m(i, c)) < D::weight(m(best, c)))) best = i;
        if (best == rows) continue;
        if (best != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(best, j), m(r, j));
            sign = -sign;
        }
        const T pivot = m(r, c);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const T factor = m(i, c);
            for (std::size_t j = 0; j < cols; ++j) {
                if (D::is_zero(factor)) {
                    if (!D::is_zero(m(i, j))) m(i, j) = D::exact_div(pivot * m(i, j), prev);
                } else {
                    m(i, j) = D::exact_div(pivot * m(i, j) - factor * m(r, j), prev);
                }
            }
        }
        prev = pivot;
        pivots.push_back(c);
        ++r;
    }
    return FractionFreeForm<T>{std::move(m), std::move(pivots), std::move(prev), sign};
}

Matrix<Integer> clear_row_denominators(const Matrix<Rational>& m) {
    Matrix<Integer> out(m.rows(), m.cols(), Integer(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Rational scaled = m(i, j) * l;
            out(i, j) = scaled.get_num();
        }
    }
    return out;
}

// Multiplies each row by a monomial so every entry is an ordinary polynomial.
Matrix<MultiPoly> clear_row_monomials(const Matrix<LaurentPoly>& m) {
    Matrix<MultiPoly> out(m.rows(), m.cols(), MultiPoly(m.nvars()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Monomial low(m.nvars());
        bool any = false;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).is_zero()) continue;
            Monomial e = min_exponents(m(i, j));
            low = any ? min_exponents(low, e) : e;
            any = true;
        }
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = to_ordinary(shift(m(i, j), -low));
    }
    return out;
}

Matrix<MultiPoly> as_constant_polys(const Matrix<Rational>& m) {
    return map_entries(m, MultiPoly(0), [](const Rational& r) { return MultiPoly::constant(0, r); });
}

template <class T>
Matrix<T> hconcat(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows()) throw ShapeMismatch("augment " + a.shape() + " with " + b.shape());
    Matrix<T> r(a.rows(), a.cols() + b.cols(), a.zero());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

SolveResult<MultiPoly> solve_polynomial(const Matrix<MultiPoly>& a, const Matrix<MultiPoly>& b) {
    if (a.rows() != b.rows()) throw ShapeMismatch("solve_right: A is " + a.shape() + ", B is " + b.shape());
    const std::size_t n = a.cols();
    const std::size_t k = b.cols();
    const MultiPoly zero(a.nvars());
    auto form = fraction_free_gauss_jordan(hconcat(a, b), n);
    const auto& red = form.reduced;
    for (std::size_t i = form.rank(); i < red.rows(); ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (!red(i, n + j).is_zero())
                throw NoSolution("inconsistent system in row " + std::to_string(i + 1) + " after elimination");

    SolveResult<MultiPoly> out{Matrix<MultiPoly>(n, k, zero), form.scale, {}, false, std::nullopt};
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < form.rank(); ++i) {
        std::size_t p = form.pivot_cols[i];
        is_pivot[p] = true;
        for (std::size_t j = 0; j < k; ++j) out.numerator(p, j) = red(i, n + j);
    }
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Matrix<MultiPoly> v(n, 1, zero);
        v(f, 0) = form.scale;
        for (std::size_t i = 0; i < form.rank(); ++i) v(form.pivot_cols[i], 0) = -red(i, f);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

} // namespace

FractionFreeForm<Integer> fraction_free_gauss_jordan(Matrix<Integer> m, std::size_t pivot_limit) {
    return gauss_jordan<Integer, IntegerDomain>(std::move(m), pivot_limit);
}

FractionFreeForm<MultiPoly> fraction_free_gauss_jordan(Matrix<MultiPoly> m, std::size_t pivot_limit) {
    return gauss_jordan<MultiPoly, PolyDomain>(std::move(m), pivot_limit);
}

std::size_t rank(const Matrix<Rational>& m) {
    return fraction_free_gauss_jordan(clear_row_denominators(m), m.cols()).rank();
}

Rational determinant(const Matrix<Rational>& m) {
    if (!m.is_square()) throw ShapeMismatch("determinant of " + m.shape());
    if (m.rows() == 0) return Rational(1);
    Integer row_scale = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        row_scale *= l;
    }
    auto form = fraction_free_gauss_jordan(clear_row_denominators(m), m.cols());
    if (form.rank() < m.rows()) return Rational(0);
    Rational det(form.scale * form.row_swap_sign, row_scale);
    det.canonicalize();
    return det;
}

std::size_t symbolic_rank(const Matrix<MultiPoly>& m) { return fraction_free_gauss_jordan(m, m.cols()).rank(); }

std::size_t symbolic_rank(const Matrix<LaurentPoly>& m) { return symbolic_rank(clear_row_monomials(m)); }

namespace {

std::vector<Rational> random_point(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(2, 9973);
    std::uniform_int_distribution<int> den(1, 97);
    std::vector<Rational> p;
    for (std::size_t i = 0; i < n; ++i) {
        Rational r(num(rng), den(rng));
        r.canonicalize();
        p.push_back(r);
    }
    return p;
}

template <class T>
std::size_t generic_rank_impl(const Matrix<T>& m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto p1 = random_point(m.nvars(), rng);
    auto p2 = random_point(m.nvars(), rng);
    std::size_t r1 = rank_at(m, std::span<const Rational>(p1));
    std::size_t r2 = rank_at(m, std::span<const Rational>(p2));
    if (r1 == r2) return r1;
    return symbolic_rank(m);
}

} // namespace

std::size_t generic_rank(const Matrix<MultiPoly>& m, std::uint64_t seed) { return generic_rank_impl(m, seed); }
std::size_t generic_rank(const Matrix<LaurentPoly>& m, std::uint64_t seed) { return generic_rank_impl(m, seed); }

SolveResult<MultiPoly> solve_right(const Matrix<MultiPoly>& a, const Matrix<MultiPoly>& b) {
    auto out = solve_polynomial(a, b);
    Matrix<MultiPoly> x(out.numerator.rows(), out.numerator.cols(), a.zero());
    bool ok = true;
    for (std::size_t i = 0; i < x.rows() && ok; ++i)
        for (std::size_t j = 0; j < x.cols() && ok; ++j) {
            auto q = divide_exact(out.numerator(i, j), out.denominator);
            if (q) x(i, j) = *q;
            else ok = false;
        }
    out.in_ring = ok;
    if (ok) out.solution = std::move(x);
    return out;
}

SolveResult<LaurentPoly> solve_right(const Matrix<LaurentPoly>& a, const Matrix<LaurentPoly>& b) {
    if (a.rows() != b.rows()) throw ShapeMismatch("solve_right: A is " + a.shape() + ", B is " + b.shape());
    // Row scaling by monomials (units) leaves the solution set unchanged.
    auto aug = clear_row_monomials(hconcat(a, b));
    auto poly = solve_polynomial(aug.block(0, 0, a.rows(), a.cols()), aug.block(0, a.cols(), a.rows(), b.cols()));
    const LaurentPoly zero(a.nvars());
    SolveResult<LaurentPoly> out{to_laurent(poly.numerator), to_laurent(poly.denominator), {}, false, std::nullopt};
    for (const auto& v : poly.kernel) out.kernel.push_back(to_laurent(v));
    Matrix<LaurentPoly> x(out.numerator.rows(), out.numerator.cols(), zero);
    bool ok = true;
    for (std::size_t i = 0; i < x.rows() && ok; ++i)
        for (std::size_t j = 0; j < x.cols() && ok; ++j) {
            auto q = divide_exact(out.numerator(i, j), out.denominator);
            if (q) x(i, j) = *q;
            else ok = false;
        }
    out.in_ring = ok;
    if (ok) out.solution = std::move(x);
    return out;
}

SolveResult<Rational> solve_right(const Matrix<Rational>& a, const Matrix<Rational>& b) {
    auto poly = solve_polynomial(as_constant_polys(a), as_constant_polys(b));
    auto to_q = [](const MultiPoly& p) { return p.constant_term(); };
    SolveResult<Rational> out{map_entries(poly.numerator, Rational(0), to_q), to_q(poly.denominator), {}, true,
                              std::nullopt};
    for (const auto& v : poly.kernel) out.kernel.push_back(map_entries(v, Rational(0), to_q));
    Matrix<Rational> x(out.numerator);
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) x(i, j) /= out.denominator;
    out.solution = std::move(x);
    return out;
}

Matrix<Rational> right_kernel(const Matrix<Rational>& a) {
    auto res = solve_right(a, Matrix<Rational>(a.rows(), 0, Rational(0)));
    Matrix<Rational> k(a.cols(), res.kernel.size(), Rational(0));
    for (std::size_t c = 0; c < res.kernel.size(); ++c)
        for (std::size_t i = 0; i < a.cols(); ++i) k(i, c) = res.kernel[c](i, 0);
    return k;
}

Matrix<Rational> left_kernel(const Matrix<Rational>& a) { return right_kernel(a.transposed()).transposed(); }

Matrix<Rational> independent_rows(const Matrix<Rational>& a) {
    Matrix<Rational> kept(0, a.cols(), Rational(0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto candidate = stack_rows(kept, a.block(i, 0, 1, a.cols()));
        if (rank(candidate) == candidate.rows()) kept = std::move(candidate);
    }
    return kept;
}

Matrix<TruncatedSeries> mat_exp_truncated(const Matrix<MultiPoly>& m, int cap) {
    if (!m.is_square()) throw ShapeMismatch("matrix exponential of " + m.shape());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j).constant_term() != 0)
                throw NonzeroConstantTerm("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    const TruncatedSeries zero(m.nvars(), cap);
    auto s = map_entries(m, zero, [cap](const MultiPoly& e) { return TruncatedSeries(e, cap); });
    auto result = Matrix<TruncatedSeries>::identity(m.rows(), zero);
    auto power = result;
    // Entries of M^k start in degree k, so the sum stops at k = cap.
    for (int k = 1; k <= cap; ++k) {
        power = (power * s).scaled(Rational(1, k));
        result += power;
    }
    return result;
}

} // namespace arrmono
