#include "arrmono/poly.hpp"

namespace arrmono {

std::optional<MultiPoly> divide_exact(const MultiPoly& num, const MultiPoly& den) {
    if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (num.nvars() != den.nvars()) throw ShapeMismatch("divide_exact: variable counts differ");
    MultiPoly quotient(num.nvars());
    MultiPoly rest(num);
    const Monomial& lead = den.leading_monomial();
    const Rational& lead_coeff = den.leading_coefficient();
    while (!rest.is_zero()) {
        // If den | rest then lt(rest) = lt(den) * lt(quotient part), so a
        // non-divisible leading term proves the division is not exact.
        const Monomial& top = rest.leading_monomial();
        if (!lead.divides(top)) return std::nullopt;
        MultiPoly step = MultiPoly::term(top - lead, rest.leading_coefficient() / lead_coeff);
        quotient += step;
        rest -= step * den;
    }
    return quotient;
}

Monomial min_exponents(const LaurentPoly& p) {
    Monomial m(p.nvars());
    bool first = true;
    for (const auto& [mono, c] : p.terms()) {
        m = first ? mono : min_exponents(m, mono);
        first = false;
    }
    return m;
}

LaurentPoly shift(const LaurentPoly& p, const Monomial& by) {
    LaurentPoly r(p.nvars());
    for (const auto& [m, c] : p.terms()) r.add_term(m + by, c);
    return r;
}

LaurentPoly to_laurent(const MultiPoly& p) {
    LaurentPoly r(p.nvars());
    for (const auto& [m, c] : p.terms()) r.add_term(m, c);
    return r;
}

MultiPoly to_ordinary(const LaurentPoly& p) {
    MultiPoly r(p.nvars());
    for (const auto& [m, c] : p.terms()) r.add_term(m, c);
    return r;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (num.is_zero()) return LaurentPoly(num.nvars());
    // den = x^s * d with d free of monomial factors; d is then coprime to every
    // x_i, so num/den is Laurent exactly when d divides the polynomial part of num.
    Monomial den_shift = min_exponents(den);
    Monomial num_shift = min_exponents(num);
    MultiPoly d = to_ordinary(shift(den, -den_shift));
    MultiPoly n = to_ordinary(shift(num, -num_shift));
    auto q = divide_exact(n, d);
    if (!q) return std::nullopt;
    return shift(to_laurent(*q), num_shift - den_shift);
}

Linearization linearize(const LaurentPoly& p) {
    Linearization out{Rational(0), MultiPoly(p.nvars())};
    for (const auto& [m, c] : p.terms()) {
        out.constant += c;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) out.linear.add_term(Monomial::unit(p.nvars(), i), c * m[i]);
    }
    return out;
}

MultiPoly linear_part(const LaurentPoly& p) { return linearize(p).linear; }

} // namespace arrmono
