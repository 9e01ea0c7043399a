#pragma once

#include "arrmono/errors.hpp"
#include "arrmono/poly.hpp"
#include "arrmono/series.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace arrmono {

// Per-ring hooks the generic matrix code needs: how to build 1 from a zero
// prototype, and how to name the ring in serialized output.
template <class T>
struct RingTraits;

template <>
struct RingTraits<Rational> {
    static constexpr const char* tag = "rational";
    static Rational one_like(const Rational&) { return Rational(1); }
    static std::size_t nvars(const Rational&) { return 0; }
    static bool is_zero(const Rational& r) { return r == 0; }
};

template <>
struct RingTraits<MultiPoly> {
    static constexpr const char* tag = "poly";
    static MultiPoly one_like(const MultiPoly& z) { return MultiPoly::constant(z.nvars(), 1); }
    static std::size_t nvars(const MultiPoly& p) { return p.nvars(); }
    static bool is_zero(const MultiPoly& p) { return p.is_zero(); }
};

template <>
struct RingTraits<LaurentPoly> {
    static constexpr const char* tag = "laurent";
    static LaurentPoly one_like(const LaurentPoly& z) { return LaurentPoly::constant(z.nvars(), 1); }
    static std::size_t nvars(const LaurentPoly& p) { return p.nvars(); }
    static bool is_zero(const LaurentPoly& p) { return p.is_zero(); }
};

template <>
struct RingTraits<TruncatedSeries> {
    static constexpr const char* tag = "series";
    static TruncatedSeries one_like(const TruncatedSeries& z) {
        return TruncatedSeries(MultiPoly::constant(z.nvars(), 1), z.cap());
    }
    static std::size_t nvars(const TruncatedSeries& s) { return s.nvars(); }
    static bool is_zero(const TruncatedSeries& s) { return s.is_zero(); }
};

// Dense row-major matrix over one of the kernel rings. Composition follows the
// row-vector convention v -> v * M throughout the library, so a chain map F of
// a complex with boundaries D satisfies D^q * F^{q+1} == F^q * D^q literally.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& zero)
        : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

    static Matrix identity(std::size_t n, const T& zero) {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = RingTraits<T>::one_like(zero);
        return m;
    }

    // rows given as nested vectors; all rows must have equal length.
    static Matrix from_rows(const std::vector<std::vector<T>>& rows, const T& zero) {
        std::size_t cols = rows.empty() ? 0 : rows.front().size();
        Matrix m(rows.size(), cols, zero);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw ShapeMismatch("ragged matrix rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const T& zero() const noexcept { return zero_; }
    std::size_t nvars() const { return RingTraits<T>::nvars(zero_); }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& e : data_)
            if (!RingTraits<T>::is_zero(e)) return false;
        return true;
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o, "add");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o, "subtract");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw ShapeMismatch("multiply " + a.shape() + " by " + b.shape());
        Matrix r(a.rows_, b.cols_, a.zero_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (RingTraits<T>::is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!RingTraits<T>::is_zero(b(k, j))) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    Matrix scaled(const T& s) const {
        Matrix r(*this);
        for (auto& e : r.data_) e = s * e;
        return r;
    }
    Matrix scaled(const Rational& s) const requires(!std::is_same_v<T, Rational>) {
        Matrix r(*this);
        for (auto& e : r.data_) e *= s;
        return r;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        Matrix b(nr, nc, zero_);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

private:
    void check_same_shape(const Matrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw ShapeMismatch(std::string(op) + " " + shape() + " and " + o.shape());
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    T zero_{};
    std::vector<T> data_;
};

// Entrywise transform into another ring; `zero` is the target prototype.
template <class U, class T, class F>
Matrix<U> map_entries(const Matrix<T>& m, const U& zero, F&& f) {
    Matrix<U> r(m.rows(), m.cols(), zero);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = f(m(i, j));
    return r;
}

template <class T>
Matrix<Rational> evaluate(const Matrix<T>& m, std::span<const Rational> point) {
    return map_entries(m, Rational(0), [&](const T& e) { return e.evaluate(point); });
}

inline Matrix<MultiPoly> linear_part(const Matrix<LaurentPoly>& m) {
    return map_entries(m, MultiPoly(m.nvars()), [](const LaurentPoly& e) { return linear_part(e); });
}

inline Matrix<TruncatedSeries> exp_substitute(const Matrix<LaurentPoly>& m, int cap = kDefaultSeriesCap) {
    return map_entries(m, TruncatedSeries(m.nvars(), cap),
                       [cap](const LaurentPoly& e) { return exp_substitute(e, cap); });
}

inline Matrix<LaurentPoly> to_laurent(const Matrix<MultiPoly>& m) {
    return map_entries(m, LaurentPoly(m.nvars()), [](const MultiPoly& e) { return to_laurent(e); });
}


// Human-readable rendering, one row per line, columns separated by " | ".
template <class T>
std::string render(const Matrix<T>& m, char var) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += "[ ";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += " | ";
            if constexpr (std::is_same_v<T, Rational>)
                out += to_string(m(i, j));
            else
                out += m(i, j).render(var);
        }
        out += " ]\n";
    }
    return out;
}

} // namespace arrmono
