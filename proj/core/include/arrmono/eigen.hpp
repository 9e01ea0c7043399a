#pragma once

#include "arrmono/charpoly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace arrmono {

// One certified factor (z - e)^multiplicity of a characteristic polynomial.
// For monomial eigenvalues `exponents` is m in x^m; for linear forms it is the
// coefficient vector c in c . y. The two readings share a vector so that the
// monomial x^m and the form m . y are compared by plain equality.
struct EigenFactor {
    std::vector<int> exponents;
    std::size_t multiplicity = 0;
    bool operator==(const EigenFactor&) const = default;
};

enum class EigenKind { Monomial, LinearForm };

struct EigenReport {
    EigenKind kind = EigenKind::Monomial;
    std::size_t nvars = 0;
    std::vector<EigenFactor> factors;  // sorted by the canonical monomial order

    std::size_t total_multiplicity() const;
    LaurentPoly monomial(std::size_t i) const;
    MultiPoly linear_form(std::size_t i) const;
    // Value of factor i at a point (monomial or linear form by kind).
    Rational value_at(std::size_t i, std::span<const Rational> point) const;
    std::string render() const;
};

// Rational roots of a rational polynomial with multiplicity, ascending. Roots
// outside Q are not reported.
std::vector<Rational> rational_roots(const CharPoly<Rational>& p);

// Factors char_poly(phi) into (z - x^m) factors, reading candidates from the
// rational roots at the prime probe (2,3,5,7,...) and certifying each by exact
// division. Throws NotIdentityAtOne, NonIntegerRootAtProbe, FactorizationFailed.
EigenReport eigen_monomials(const Matrix<LaurentPoly>& phi);

// Factors char_poly(omega) into (z - c.y) factors with integer c: integer roots
// at the unit vectors give candidate coordinates, a seeded generic point
// filters combinations, exact division certifies. Throws FactorizationFailed.
EigenReport eigen_linear_forms(const Matrix<MultiPoly>& omega, std::uint64_t seed = 1);

// Every monomial factor x^m with multiplicity k has the form m.y among the
// linear factors with multiplicity at least k.
bool spectra_correspond(const EigenReport& monomials, const EigenReport& forms);

} // namespace arrmono
