#pragma once

#include "arrmono/errors.hpp"
#include "arrmono/monomial.hpp"
#include "arrmono/rational.hpp"

#include <cassert>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

namespace arrmono {

enum class PolyKind { Ordinary, Laurent };

// Sparse multivariate polynomial with rational coefficients. Ordinary
// polynomials (the ring Q[y]) reject negative exponents; Laurent polynomials
// (Q[x, 1/x]) accept them. Zero coefficients are never stored, and terms are
// kept in the canonical monomial order, which fixes serialization.
template <PolyKind Kind>
class Poly {
public:
    using TermMap = std::map<Monomial, Rational>;
    static constexpr bool laurent = Kind == PolyKind::Laurent;

    Poly() = default;
    explicit Poly(std::size_t nvars) : nvars_(nvars) {}

    static Poly constant(std::size_t nvars, const Rational& c) {
        Poly p(nvars);
        p.add_term(Monomial(nvars), c);
        return p;
    }
    static Poly variable(std::size_t nvars, std::size_t var, int power = 1) {
        Poly p(nvars);
        p.add_term(Monomial::unit(nvars, var, power), Rational(1));
        return p;
    }
    static Poly term(const Monomial& m, const Rational& c) {
        Poly p(m.size());
        p.add_term(m, c);
        return p;
    }

    std::size_t nvars() const noexcept { return nvars_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational constant_term() const { return coefficient(Monomial(nvars_)); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    // Largest monomial in the canonical order; requires a nonzero polynomial.
    const Monomial& leading_monomial() const {
        assert(!terms_.empty());
        return terms_.rbegin()->first;
    }
    const Rational& leading_coefficient() const {
        assert(!terms_.empty());
        return terms_.rbegin()->second;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (m.size() != nvars_)
            throw std::invalid_argument("monomial has " + std::to_string(m.size()) +
                                        " variables, ring has " + std::to_string(nvars_));
        if constexpr (!laurent) {
            if (!m.is_nonnegative())
                throw std::domain_error("negative exponent in an ordinary polynomial");
        }
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        check_ring(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_ring(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Poly& operator*=(const Rational& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    Poly operator-() const {
        Poly r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_ring(b);
        Poly r(a.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
        return r;
    }

    bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    // Exact evaluation. Laurent terms with a negative exponent at a zero
    // coordinate raise ZeroAtPole.
    Rational evaluate(std::span<const Rational> point) const {
        if (point.size() != nvars_)
            throw ShapeMismatch("evaluation point has " + std::to_string(point.size()) +
                                " coordinates, ring has " + std::to_string(nvars_));
        Rational total(0);
        for (const auto& [m, c] : terms_) {
            Rational value(c);
            for (std::size_t i = 0; i < nvars_; ++i) {
                int e = m[i];
                if (e == 0) continue;
                if (e < 0 && point[i] == 0)
                    throw ZeroAtPole("x" + std::to_string(i + 1) + "^" + std::to_string(e) + " at 0");
                Rational base = e > 0 ? point[i] : Rational(1) / point[i];
                for (int k = 0; k < (e > 0 ? e : -e); ++k) value *= base;
            }
            total += value;
        }
        return total;
    }

    // Sum of the terms of total degree d.
    Poly homogeneous_part(int d) const {
        Poly r(nvars_);
        for (const auto& [m, c] : terms_)
            if (m.degree() == d) r.terms_.emplace(m, c);
        return r;
    }

    int max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

    bool has_integer_coefficients() const {
        for (const auto& [m, c] : terms_)
            if (!is_integer(c)) return false;
        return true;
    }

    // Homogeneous of degree one (zero counts) with integer coefficients.
    bool is_integral_linear_form() const {
        for (const auto& [m, c] : terms_)
            if (m.degree() != 1 || !m.is_nonnegative() || !is_integer(c)) return false;
        return true;
    }

    // Human form such as "1 - x1 + x1*x2".
    std::string render(char var) const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rational mag = abs(c);
            if (first) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            first = false;
            if (m.is_one()) {
                out += to_string(mag);
            } else {
                if (mag != 1) out += to_string(mag) + "*";
                out += render_monomial(m, var);
            }
        }
        return out;
    }

    // [["c",[e1,...,en]],...] in canonical order; coefficients are quoted so
    // the text is valid JSON.
    std::string serialize() const {
        std::string out = "[";
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) out += ',';
            first = false;
            out += "[\"" + to_string(c) + "\"," + serialize_monomial(m) + "]";
        }
        return out + "]";
    }

private:
    void check_ring(const Poly& o) const {
        if (nvars_ != o.nvars_)
            throw ShapeMismatch("polynomials over " + std::to_string(nvars_) + " and " +
                                std::to_string(o.nvars_) + " variables");
    }

    std::size_t nvars_ = 0;
    TermMap terms_;
};

using MultiPoly = Poly<PolyKind::Ordinary>;
using LaurentPoly = Poly<PolyKind::Laurent>;

// Quotient when den divides num exactly in Q[y], nullopt otherwise.
std::optional<MultiPoly> divide_exact(const MultiPoly& num, const MultiPoly& den);

// Quotient when num/den lies in the Laurent ring, nullopt otherwise.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& num, const LaurentPoly& den);

LaurentPoly to_laurent(const MultiPoly& p);
// Requires nonnegative exponents.
MultiPoly to_ordinary(const LaurentPoly& p);

// Smallest exponent per variable over all terms (zero vector for p == 0).
Monomial min_exponents(const LaurentPoly& p);

// Multiplies by the monomial x^shift; exponents are shifted, coefficients kept.
LaurentPoly shift(const LaurentPoly& p, const Monomial& shift);

struct Linearization {
    Rational constant;  // p(1, ..., 1)
    MultiPoly linear;   // degree-one part of p(exp(y))
};

// Degree zero and one parts of p under x_j = exp(y_j).
Linearization linearize(const LaurentPoly& p);
MultiPoly linear_part(const LaurentPoly& p);

} // namespace arrmono
