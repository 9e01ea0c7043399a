#pragma once

#include "arrmono/complex.hpp"
#include "arrmono/free_group.hpp"

namespace arrmono {

// Abelianized Fox derivative d w / d g_gen (gen 1-based) in Q[x^{+-1}]:
// d(uv) = du + u^ab dv, d g_j = 1, d g_j^-1 = -x_j^-1.
LaurentPoly fox_derivative(const FreeWord& w, int gen, std::size_t ngens);

// K^0 = L, K^1 = L^n, K^2 = L^m with Delta^0 = [x_j - 1] and
// Delta^1[i][k] = d r_k / d g_i. Throws FundamentalIdentityFailed if
// Delta^0 * Delta^1 != 0.
RingComplex<LaurentPoly> universal_complex(const Presentation& p);

// Phi^1[i][j] = d phi(g_j) / d g_i. Throws AbelianizationNotPreserved.
Matrix<LaurentPoly> phi1(const Endomorphism& phi);

// Phi^2[k][l] = sum over terms of cert row l targeting k of sign * conj^ab.
// Validates the certificate (CertificateInvalid) and the chain identity
// Delta^1 Phi^2 == Phi^1 Delta^1 (ChainIdentityFailed).
Matrix<LaurentPoly> phi2_from_certificate(const Presentation& p, const Endomorphism& phi,
                                          const RelatorCertificate& cert);

// Throws ChainIdentityFailed at the first entry where
// delta * next != current * delta.
void verify_chain_map(const Matrix<LaurentPoly>& delta, const Matrix<LaurentPoly>& current,
                      const Matrix<LaurentPoly>& next, std::size_t degree);
void verify_chain_map(const Matrix<MultiPoly>& delta, const Matrix<MultiPoly>& current,
                      const Matrix<MultiPoly>& next, std::size_t degree);

// One solution of Delta^1 X = Phi^1 Delta^1 plus the kernel of Delta^1. The
// chain condition alone does not pin Phi^2, so the result is non-canonical.
struct Phi2Fallback {
    SolveResult<LaurentPoly> solution;
    static constexpr bool canonical = false;
};
Phi2Fallback phi2_solve_fallback(const Matrix<LaurentPoly>& delta1, const Matrix<LaurentPoly>& phi1);

// Phi^0, Phi^1, Phi^2 for one endomorphism.
struct UniversalRepresentation {
    std::vector<Matrix<LaurentPoly>> phi;
};

UniversalRepresentation universal_representation(const Presentation& p, const Endomorphism& phi,
                                                 const RelatorCertificate& cert);

} // namespace arrmono
