#pragma once

#include "arrmono/complex.hpp"
#include "arrmono/eigen.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arrmono {

// Omega^q = entrywise linear part of Phi^q under x = exp(y).
struct FormalConnection {
    std::vector<Matrix<MultiPoly>> omega;
};

// Throws NotIdentityAtOne unless every Phi^q(1) = I, and VerificationFailed if
// some Omega entry is not an integral linear form.
FormalConnection formal_connection(const std::vector<Matrix<LaurentPoly>>& phi);

struct EntryMismatch {
    std::size_t row;
    std::size_t col;
    std::string lhs;
    std::string rhs;
};

// Comparison of exp_substitute(Phi, cap) with mat_exp_truncated(Omega, cap).
// `entrywise` is the literal matrix identity Phi(exp y) = exp(Omega(y));
// `spectral` compares the characteristic polynomials of both sides through
// degree cap.
struct ExpRelationReport {
    int cap = kDefaultSeriesCap;
    bool entrywise = false;
    std::vector<EntryMismatch> mismatches;
    bool spectral = false;
};

ExpRelationReport verify_exp_relation(const Matrix<LaurentPoly>& phi, const Matrix<MultiPoly>& omega,
                                      int cap = kDefaultSeriesCap);

// Degree-two comparison in Delta^q Phi^{q+1} = Phi^q Delta^q after x = exp(y):
//   D0 P'2 + D1 P'1 + D2 P'0 == P0 D2 + P1 D1 + P2 D0.
// Returns the first mismatching entry, if any.
std::optional<EntryMismatch> check_degree_two_identity(const Matrix<LaurentPoly>& delta,
                                                       const Matrix<LaurentPoly>& phi_q,
                                                       const Matrix<LaurentPoly>& phi_next);

// First entry where mu * next != current * mu, if any.
std::optional<EntryMismatch> check_chain_map(const Matrix<MultiPoly>& mu, const Matrix<MultiPoly>& current,
                                             const Matrix<MultiPoly>& next);

inline Matrix<Rational> gauss_manin_matrix(const Matrix<MultiPoly>& omega, std::span<const Rational> weights) {
    if (weights.size() != omega.nvars())
        throw ShapeMismatch("weights have length " + std::to_string(weights.size()) + ", expected " +
                            std::to_string(omega.nvars()));
    return evaluate(omega, weights);
}

// Substitution x_k -> x^{m_k} for some variables; on the y side it acts as
// y_k -> m_k . y. Describes a subtorus such as t1 t2 t3 = 1, t4 = 1.
struct MonomialSubstitution {
    std::size_t nvars = 0;
    std::vector<std::optional<Monomial>> image;

    bool is_identity() const;
    LaurentPoly apply(const LaurentPoly& p) const;
    MultiPoly apply(const MultiPoly& p) const;
    template <class T>
    Matrix<T> apply(const Matrix<T>& m) const {
        return map_entries(m, m.zero(), [this](const T& e) { return apply(e); });
    }
    // Restricts a point to the subtorus by overwriting substituted coordinates.
    std::vector<Rational> restrict_point(std::span<const Rational> t) const;
    std::string render() const;
};

// Xi : K^2 -> L^h (rows index K^2) and its linearization Upsilon. The relations
// Delta^1 Xi = 0 and mu^1 Upsilon = 0 are required on `component` only.
struct ProjectionData {
    Matrix<LaurentPoly> xi;
    Matrix<MultiPoly> upsilon;
    MonomialSubstitution component;

    // Matrix rows "e11, e12, ..." plus optional "on x3 = x1^-1*x2^-1" lines.
    static ProjectionData parse(std::string_view text, std::size_t nvars);
    static ProjectionData load(const std::string& path, std::size_t nvars);
};

// Throws VerificationFailed unless Delta^1 Xi and mu^1 Upsilon vanish on the
// component and Xi has full column rank there.
void verify_projection(const ProjectionData& proj, const Matrix<LaurentPoly>& delta1,
                       const Matrix<MultiPoly>& mu1);

// The X with Phi Xi = Xi X. Throws NoSolution, NotInRing, VerificationFailed
// (when Xi lacks full column rank, so X would not be unique).
Matrix<LaurentPoly> induced_map(const Matrix<LaurentPoly>& xi, const Matrix<LaurentPoly>& phi);
Matrix<MultiPoly> induced_map(const Matrix<MultiPoly>& upsilon, const Matrix<MultiPoly>& omega);

// Action of the chain map on H^q of a rational complex, one matrix per degree,
// in the basis of complements chosen to extend im d^{q-1} inside ker d^q.
// Throws ChainIdentityFailed when the maps do not commute with the boundaries.
std::vector<Matrix<Rational>> cohomology_action(const RingComplex<Rational>& complex,
                                                const std::vector<Matrix<Rational>>& maps);

struct WeightClassification {
    std::vector<std::size_t> betti;       // ranks of the cochain modules
    std::vector<std::size_t> cohomology;  // h^q
    long euler_characteristic = 0;
    bool non_resonant = false;            // h^q = 0 for q below the top degree
    bool top_matches_euler = false;       // h^top = |e(M)|
};

WeightClassification classify_weights(const RingComplex<Rational>& specialized);

} // namespace arrmono
