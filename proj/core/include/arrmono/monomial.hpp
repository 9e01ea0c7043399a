#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace arrmono {

// Exponent vector x_1^{e_1} ... x_n^{e_n}. The length is the ambient variable
// count of the ring the monomial lives in.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}
    Monomial(std::initializer_list<int> exps) : exps_(exps) {}

    static Monomial unit(std::size_t nvars, std::size_t var, int power = 1) {
        Monomial m(nvars);
        m.exps_[var] = power;
        return m;
    }

    std::size_t size() const noexcept { return exps_.size(); }
    int operator[](std::size_t i) const { return exps_[i]; }
    int& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<int>& exponents() const noexcept { return exps_; }

    int degree() const;
    bool is_one() const;
    bool is_nonnegative() const;
    // True when every exponent of *this is <= the matching exponent of other.
    bool divides(const Monomial& other) const;

    Monomial& operator+=(const Monomial& o);
    Monomial& operator-=(const Monomial& o);
    friend Monomial operator+(Monomial a, const Monomial& b) { return a += b; }
    friend Monomial operator-(Monomial a, const Monomial& b) { return a -= b; }
    Monomial operator-() const;

    bool operator==(const Monomial& o) const = default;

    // Canonical term order: total degree first, then reverse lexicographic on
    // the exponent vector, so x1 sorts before x2 within one degree. This is a
    // monomial order (translation invariant, well-founded on N^n).
    std::strong_ordering operator<=>(const Monomial& o) const;

private:
    std::vector<int> exps_;
};

// Componentwise minimum / maximum.
Monomial min_exponents(const Monomial& a, const Monomial& b);

// "x1^2*x3" style rendering with the given variable letter; "1" for the unit.
std::string render_monomial(const Monomial& m, char var);

// "[1,0,-2]".
std::string serialize_monomial(const Monomial& m);

} // namespace arrmono
