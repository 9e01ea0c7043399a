#include "arrmono/fox.hpp"

namespace arrmono {

LaurentPoly fox_derivative(const FreeWord& w, int gen, std::size_t ngens) {
    LaurentPoly d(ngens);
    Monomial prefix(ngens);
    const std::size_t j = static_cast<std::size_t>(gen - 1);
    for (const auto& l : w.letters()) {
        if (l.gen == gen) {
            if (l.exp > 0) {
                d.add_term(prefix, Rational(1));
            } else {
                Monomial shifted = prefix;
                shifted[j] -= 1;
                d.add_term(shifted, Rational(-1));
            }
        }
        prefix[static_cast<std::size_t>(l.gen - 1)] += l.exp;
    }
    return d;
}

RingComplex<LaurentPoly> universal_complex(const Presentation& p) {
    const std::size_t n = static_cast<std::size_t>(p.ngens);
    const std::size_t m = p.relators.size();
    const LaurentPoly zero(n);
    Matrix<LaurentPoly> d0(1, n, zero);
    for (std::size_t j = 0; j < n; ++j) d0(0, j) = LaurentPoly::variable(n, j) - LaurentPoly::constant(n, 1);
    Matrix<LaurentPoly> d1(n, m, zero);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < m; ++k) d1(i, k) = fox_derivative(p.relators[k], static_cast<int>(i + 1), n);
    auto prod = d0 * d1;
    for (std::size_t k = 0; k < m; ++k)
        if (!prod(0, k).is_zero())
            throw FundamentalIdentityFailed("relator " + std::to_string(k + 1) + " gives " + prod(0, k).render('x') +
                                            " instead of 0 (it is not in the commutator subgroup)");
    return RingComplex<LaurentPoly>{{1, n, m}, {std::move(d0), std::move(d1)}};
}

Matrix<LaurentPoly> phi1(const Endomorphism& phi) {
    const std::size_t n = phi.images.size();
    for (std::size_t j = 0; j < n; ++j) {
        Monomial ab = phi.images[j].abelianization(n);
        if (ab != Monomial::unit(n, j))
            throw AbelianizationNotPreserved("image of g" + std::to_string(j + 1) + " abelianizes to " +
                                             render_monomial(ab, 'x'));
    }
    Matrix<LaurentPoly> out(n, n, LaurentPoly(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = fox_derivative(phi.images[j], static_cast<int>(i + 1), n);
    return out;
}

namespace {

template <class T>
void verify_chain_map_impl(const Matrix<T>& delta, const Matrix<T>& current, const Matrix<T>& next,
                           std::size_t degree, char var) {
    auto lhs = delta * next;
    auto rhs = current * delta;
    for (std::size_t i = 0; i < lhs.rows(); ++i)
        for (std::size_t j = 0; j < lhs.cols(); ++j)
            if (!(lhs(i, j) == rhs(i, j)))
                throw ChainIdentityFailed(degree, i, j,
                                          "left side " + lhs(i, j).render(var) + ", right side " + rhs(i, j).render(var));
}

} // namespace

void verify_chain_map(const Matrix<LaurentPoly>& delta, const Matrix<LaurentPoly>& current,
                      const Matrix<LaurentPoly>& next, std::size_t degree) {
    verify_chain_map_impl(delta, current, next, degree, 'x');
}

void verify_chain_map(const Matrix<MultiPoly>& delta, const Matrix<MultiPoly>& current,
                      const Matrix<MultiPoly>& next, std::size_t degree) {
    verify_chain_map_impl(delta, current, next, degree, 'y');
}

Matrix<LaurentPoly> phi2_from_certificate(const Presentation& p, const Endomorphism& phi,
                                          const RelatorCertificate& cert) {
    auto f1 = phi1(phi);
    cert.validate(p, phi);
    const std::size_t n = static_cast<std::size_t>(p.ngens);
    const std::size_t m = p.relators.size();
    Matrix<LaurentPoly> out(m, m, LaurentPoly(n));
    for (std::size_t l = 0; l < m; ++l)
        for (const auto& t : cert.terms[l]) out(t.target, l).add_term(t.conjugator.abelianization(n), Rational(t.sign));
    auto k = universal_complex(p);
    verify_chain_map(k.boundaries[1], f1, out, 1);
    return out;
}

Phi2Fallback phi2_solve_fallback(const Matrix<LaurentPoly>& delta1, const Matrix<LaurentPoly>& phi1_matrix) {
    return Phi2Fallback{solve_right(delta1, phi1_matrix * delta1)};
}

UniversalRepresentation universal_representation(const Presentation& p, const Endomorphism& phi,
                                                 const RelatorCertificate& cert) {
    const std::size_t n = static_cast<std::size_t>(p.ngens);
    UniversalRepresentation rep;
    rep.phi.push_back(Matrix<LaurentPoly>::identity(1, LaurentPoly(n)));
    rep.phi.push_back(phi1(phi));
    rep.phi.push_back(phi2_from_certificate(p, phi, cert));
    auto k = universal_complex(p);
    verify_chain_map(k.boundaries[0], rep.phi[0], rep.phi[1], 0);
    return rep;
}

} // namespace arrmono
