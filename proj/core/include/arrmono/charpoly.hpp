#pragma once

#include "arrmono/matrix.hpp"

#include <optional>
#include <vector>

namespace arrmono {

// det(z I - M) as coefficients in z over the entry ring: coeffs[k] multiplies
// z^k and coeffs.back() is 1.
template <class T>
struct CharPoly {
    std::vector<T> coeffs;

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

    T evaluate(const T& z) const {
        T acc = coeffs.back();
        for (std::size_t k = coeffs.size() - 1; k-- > 0;) acc = acc * z + coeffs[k];
        return acc;
    }

    bool operator==(const CharPoly&) const = default;
};

namespace detail {
template <class T>
T trace(const Matrix<T>& m) {
    T t = m.zero();
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

template <class T>
T divide_by_integer(const T& e, long k) {
    if constexpr (std::is_same_v<T, Rational>)
        return e / Rational(k);
    else
        return e * Rational(1, k);
}
} // namespace detail

// Faddeev-LeVerrier: M_1 = I, c_{n-1} = -tr(M)/1, and for k >= 2
// M_k = M M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(M M_k)/k.
template <class T>
CharPoly<T> char_poly(const Matrix<T>& m) {
    if (!m.is_square()) throw ShapeMismatch("characteristic polynomial of " + m.shape());
    const std::size_t n = m.rows();
    const T one = RingTraits<T>::one_like(m.zero());
    CharPoly<T> cp{std::vector<T>(n + 1, m.zero())};
    cp.coeffs[n] = one;
    auto eye = Matrix<T>::identity(n, m.zero());
    Matrix<T> mk(n, n, m.zero());
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk + eye.scaled(cp.coeffs[n - k + 1]);
        auto prod = m * mk;
        cp.coeffs[n - k] = -detail::divide_by_integer(detail::trace(prod), static_cast<long>(k));
    }
    return cp;
}

// p(M) with scalar coefficients acting as multiples of I.
template <class T>
Matrix<T> apply_to_matrix(const CharPoly<T>& p, const Matrix<T>& m) {
    auto eye = Matrix<T>::identity(m.rows(), m.zero());
    Matrix<T> acc = eye.scaled(p.coeffs.back());
    for (std::size_t k = p.coeffs.size() - 1; k-- > 0;) acc = acc * m + eye.scaled(p.coeffs[k]);
    return acc;
}

// Quotient by (z - root) when the remainder vanishes.
template <class T>
std::optional<CharPoly<T>> divide_linear(const CharPoly<T>& p, const T& root) {
    if (p.coeffs.size() < 2) return std::nullopt;
    const std::size_t d = p.degree();
    std::vector<T> q(d, p.coeffs[0] - p.coeffs[0]);
    T carry = p.coeffs[d];
    for (std::size_t k = d; k-- > 0;) {
        q[k] = carry;
        carry = p.coeffs[k] + carry * root;
    }
    if (!RingTraits<T>::is_zero(carry)) return std::nullopt;
    return CharPoly<T>{std::move(q)};
}

} // namespace arrmono
