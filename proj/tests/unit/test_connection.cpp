#include "arrmono/charpoly.hpp"
#include "arrmono/connection.hpp"
#include "arrmono/eigen.hpp"
#include "arrmono/fox.hpp"
#include "arrmono/os_complex.hpp"
#include "arrmono/text.hpp"
#include "generators.hpp"
#include "expected.hpp"

#include <algorithm>
#include <doctest.h>

using namespace arrmono;

namespace {

struct Example {
    Presentation presentation = Presentation::load(expected::data("presentation.txt"));
    RingComplex<LaurentPoly> k = universal_complex(presentation);
    AomotoComplex a = aomoto_complex(Arrangement::load(expected::data("arrangement.txt")));
    std::vector<Matrix<LaurentPoly>> phi{Matrix<LaurentPoly>::identity(1, LaurentPoly(4)), expected::laurent(expected::kPhi1),
                                         expected::laurent(expected::kPhi2)};
};

// prod_i (z - value_i)^{k_i} as coefficients, lowest first
std::vector<Rational> expand(const EigenReport& r, std::span<const Rational> point) {
    std::vector<Rational> poly{1};
    for (std::size_t i = 0; i < r.factors.size(); ++i) {
        Rational v = r.value_at(i, point);
        for (std::size_t k = 0; k < r.factors[i].multiplicity; ++k) {
            std::vector<Rational> next(poly.size() + 1, Rational(0));
            for (std::size_t j = 0; j < poly.size(); ++j) {
                next[j + 1] += poly[j];
                next[j] -= v * poly[j];
            }
            poly = next;
        }
    }
    return poly;
}

std::vector<EigenFactor> sorted(std::vector<EigenFactor> f) {
    std::sort(f.begin(), f.end(), [](const auto& a, const auto& b) {
        return std::tie(a.exponents, a.multiplicity) < std::tie(b.exponents, b.multiplicity);
    });
    return f;
}

std::vector<Rational> roots_of(const Matrix<Rational>& m) { return rational_roots(char_poly(m)); }

} // namespace

TEST_CASE("formal connection of the Artin generator") {
    Example ex;
    auto fc = formal_connection(ex.phi);
    REQUIRE(fc.omega.size() == 3);
    CHECK(fc.omega[0].is_zero());
    CHECK(fc.omega[1] == expected::poly(expected::kOmega1));
    CHECK(fc.omega[2] == expected::poly(expected::kOmega2));
    auto shifted = ex.phi;
    shifted[1](0, 0) += LaurentPoly::constant(4, 1);
    CHECK_THROWS_AS(formal_connection(shifted), NotIdentityAtOne);
}

TEST_CASE("Omega is a chain map of the Aomoto complex") {
    Example ex;
    auto fc = formal_connection(ex.phi);
    const auto& mu = ex.a.complex.boundaries;
    CHECK_FALSE(check_chain_map(mu[0], fc.omega[0], fc.omega[1]).has_value());
    CHECK_FALSE(check_chain_map(mu[1], fc.omega[1], fc.omega[2]).has_value());
}

TEST_CASE("degree-two comparison in the chain identity holds") {
    Example ex;
    CHECK_FALSE(check_degree_two_identity(ex.k.boundaries[0], ex.phi[0], ex.phi[1]).has_value());
    CHECK_FALSE(check_degree_two_identity(ex.k.boundaries[1], ex.phi[1], ex.phi[2]).has_value());
}

TEST_CASE("exp relation: spectra agree, entries do not") {
    Example ex;
    auto fc = formal_connection(ex.phi);
    for (std::size_t q = 1; q <= 2; ++q) {
        auto report = verify_exp_relation(ex.phi[q], fc.omega[q], 2);
        CHECK(report.spectral);
        CHECK_FALSE(report.entrywise);
    }
    // entry (1,1) of the first matrix: 1 - x1 + x1 x2 at x = exp(y) has quadratic
    // part y1 y2 + y2^2/2, while (Omega^2/2)(1,1) = (y2^2 + y1 y2)/2
    auto lhs = exp_substitute(ex.phi[1], 2);
    auto rhs = mat_exp_truncated(fc.omega[1], 2);
    CHECK(lhs(0, 0).part(2) == parse_multipoly("y1 y2 + 1/2 y2^2", 4));
    CHECK(rhs(0, 0).part(2) == parse_multipoly("1/2 y1 y2 + 1/2 y2^2", 4));
    auto report = verify_exp_relation(ex.phi[1], fc.omega[1], 2);
    CHECK(report.mismatches.size() == 4);
    CHECK(verify_exp_relation(ex.phi[2], fc.omega[2], 2).mismatches.size() == 5);
    // the relation is exact at order one and for diagonal monomial matrices
    CHECK(verify_exp_relation(ex.phi[1], fc.omega[1], 1).entrywise);
    auto diag = expected::laurent("x1 x2, 0\n0, x3^-1\n");
    CHECK(verify_exp_relation(diag, linear_part(diag), 4).entrywise);
}

TEST_CASE("eigenvalues of the monodromy and the connection") {
    Example ex;
    auto fc = formal_connection(ex.phi);
    auto m1 = eigen_monomials(ex.phi[1]);
    CHECK(m1.factors == std::vector<EigenFactor>{{{0, 0, 0, 0}, 3}, {{1, 1, 0, 0}, 1}});
    auto m2 = eigen_monomials(ex.phi[2]);
    CHECK(m2.factors == std::vector<EigenFactor>{{{0, 0, 0, 0}, 3}, {{1, 1, 0, 0}, 2}});
    auto l1 = eigen_linear_forms(fc.omega[1]);
    CHECK(l1.factors == std::vector<EigenFactor>{{{0, 0, 0, 0}, 3}, {{1, 1, 0, 0}, 1}});
    auto l2 = eigen_linear_forms(fc.omega[2]);
    CHECK(l2.factors == std::vector<EigenFactor>{{{0, 0, 0, 0}, 3}, {{1, 1, 0, 0}, 2}});
    CHECK(spectra_correspond(m1, l1));
    CHECK(spectra_correspond(m2, l2));
    CHECK(m1.total_multiplicity() == 4);
    CHECK(m1.monomial(1) == parse_laurent("x1 x2", 4));
    CHECK(l1.linear_form(1) == parse_multipoly("y1 + y2", 4));
}

TEST_CASE("one-by-one exponent bookkeeping") {
    auto x = eigen_monomials(expected::laurent("x1 x2"));
    auto y = eigen_linear_forms(expected::poly("y1 + y2"));
    CHECK(x.factors == y.factors);
    CHECK(x.factors.front().exponents == std::vector<int>{1, 1, 0, 0});
}

TEST_CASE("eigen extraction rejects matrices that are not unipotent at one") {
    CHECK_THROWS_AS(eigen_monomials(expected::laurent("2 x1")), NotIdentityAtOne);
    CHECK_THROWS_AS(eigen_monomials(expected::laurent("x1 + x2 - 1")), FactorizationFailed);
    CHECK_THROWS_AS(eigen_linear_forms(expected::poly("1/2 y1")), FactorizationFailed);
}

TEST_CASE("rational roots") {
    CharPoly<Rational> p{{Rational(-6), Rational(1), Rational(1)}};  // (z + 3)(z - 2)
    CHECK(rational_roots(p) == std::vector<Rational>{-3, 2});
    CharPoly<Rational> q{{Rational(1), Rational(-2), Rational(1)}};
    CHECK(rational_roots(q) == std::vector<Rational>{1, 1});
    CharPoly<Rational> r{{Rational(-2), Rational(0), Rational(1)}};
    CHECK(rational_roots(r).empty());
    CharPoly<Rational> s{{Rational(-1), Rational(6)}};
    CHECK(rational_roots(s) == std::vector<Rational>{Rational(1, 6)});
}

TEST_CASE("induced maps on the non-resonant projection") {
    Example ex;
    auto proj = ProjectionData::load(expected::data("xi_nonresonant.txt"), 4);
    CHECK(proj.xi == expected::laurent(expected::kXiNonresonant));
    CHECK(proj.upsilon == expected::poly(expected::kUpsilonNonresonant));
    CHECK(proj.component.is_identity());
    CHECK_NOTHROW(verify_projection(proj, ex.k.boundaries[1], ex.a.complex.boundaries[1]));
    CHECK((ex.k.boundaries[1] * proj.xi).is_zero());
    auto fc = formal_connection(ex.phi);
    CHECK(induced_map(proj.xi, ex.phi[2]) == expected::laurent(expected::kPhiBarNonresonant));
    CHECK(induced_map(proj.upsilon, fc.omega[2]) == expected::poly(expected::kOmegaBarNonresonant));
}

TEST_CASE("induced maps on the resonant projection") {
    Example ex;
    auto proj = ProjectionData::load(expected::data("xi_resonant.txt"), 4);
    CHECK(proj.xi == expected::laurent(expected::kXiResonant));
    CHECK(proj.upsilon == expected::poly(expected::kUpsilonResonant));
    CHECK_NOTHROW(verify_projection(proj, ex.k.boundaries[1], ex.a.complex.boundaries[1]));
    auto fc = formal_connection(ex.phi);
    CHECK(induced_map(proj.xi, ex.phi[2]) == expected::laurent(expected::kPhiBarResonant));
    CHECK(induced_map(proj.upsilon, fc.omega[2]) == expected::poly(expected::kOmegaBarResonant));

    // off the component the products do not vanish: entry (1,1) is (1 - x2)(x1 x2 x3 - 1)
    auto product = ex.k.boundaries[1] * proj.xi;
    CHECK_FALSE(product.is_zero());
    CHECK(product(0, 0) == parse_laurent("(1 - x2)(x1 x2 x3 - 1)", 4));
    CHECK(proj.component.apply(product).is_zero());
    CHECK(proj.component.apply(ex.a.complex.boundaries[1] * proj.upsilon).is_zero());
    ProjectionData everywhere{proj.xi, proj.upsilon, MonomialSubstitution{4, {}}};
    everywhere.component.image.assign(4, std::nullopt);
    CHECK_THROWS_AS(verify_projection(everywhere, ex.k.boundaries[1], ex.a.complex.boundaries[1]), VerificationFailed);
}

TEST_CASE("induced map of the identity projection is the map itself") {
    Example ex;
    auto id = Matrix<LaurentPoly>::identity(5, LaurentPoly(4));
    CHECK(induced_map(id, ex.phi[2]) == ex.phi[2]);
    CHECK_THROWS_AS(induced_map(expected::laurent("1\n0\n"), expected::laurent("0, 1\n1, 0\n")), NoSolution);
}

TEST_CASE("cohomology action at a non-resonant point") {
    Example ex;
    std::vector<Rational> t{2, 3, 5, 7};
    auto c = ex.k.specialize(t);
    std::vector<Matrix<Rational>> maps;
    for (const auto& m : ex.phi) maps.push_back(evaluate(m, t));
    auto psi = cohomology_action(c, maps);
    REQUIRE(psi.size() == 3);
    CHECK(psi[0].rows() == 0);
    CHECK(psi[1].rows() == 0);
    CHECK(psi[2].rows() == 2);
    CHECK(roots_of(psi[2]) == std::vector<Rational>{1, 6});
    // similar to the specialized induced map
    auto bar = evaluate(expected::laurent(expected::kPhiBarNonresonant), t);
    CHECK(char_poly(psi[2]) == char_poly(bar));

    auto id = cohomology_action(c, {Matrix<Rational>::identity(1, Rational(0)), Matrix<Rational>::identity(4, Rational(0)),
                                    Matrix<Rational>::identity(5, Rational(0))});
    CHECK(id[2] == Matrix<Rational>::identity(2, Rational(0)));
}

TEST_CASE("cohomology action at a resonant point") {
    Example ex;
    std::vector<Rational> t{2, 3, Rational(1, 6), 1};
    auto c = ex.k.specialize(t);
    std::vector<Matrix<Rational>> maps;
    for (const auto& m : ex.phi) maps.push_back(evaluate(m, t));
    auto psi = cohomology_action(c, maps);
    REQUIRE(psi[1].rows() == 1);
    CHECK(psi[1](0, 0) == 6);
    CHECK(psi[2].rows() == 3);
    CHECK(char_poly(psi[2]) == char_poly(evaluate(expected::laurent(expected::kPhiBarResonant), t)));

    auto broken = maps;
    broken[2](0, 0) += 1;
    CHECK_THROWS_AS(cohomology_action(c, broken), ChainIdentityFailed);
}

TEST_CASE("Gauss-Manin action at resonant weights") {
    Example ex;
    auto fc = formal_connection(ex.phi);
    std::vector<Rational> lambda{1, 2, -3, 0};
    auto c = ex.a.complex.specialize(lambda);
    CHECK(cohomology_betti(c) == std::vector<std::size_t>{0, 1, 3});
    std::vector<Matrix<Rational>> maps;
    for (const auto& m : fc.omega) maps.push_back(gauss_manin_matrix(m, lambda));
    auto act = cohomology_action(c, maps);
    REQUIRE(act[1].rows() == 1);
    CHECK(act[1](0, 0) == 3);
    CHECK(gauss_manin_matrix(expected::poly(expected::kOmegaBarNonresonant), lambda) ==
          Matrix<Rational>::from_rows({{3, 0}, {2, 0}}, Rational(0)));
}

TEST_CASE("weight classification") {
    Example ex;
    auto nonres = classify_weights(ex.k.specialize(std::vector<Rational>{2, 2, 2, 2}));
    CHECK(nonres.cohomology == std::vector<std::size_t>{0, 0, 2});
    CHECK(nonres.non_resonant);
    CHECK(nonres.euler_characteristic == 2);
    CHECK(nonres.top_matches_euler);
    auto res = classify_weights(ex.k.specialize(std::vector<Rational>{2, 3, Rational(1, 6), 1}));
    CHECK(res.cohomology == std::vector<std::size_t>{0, 1, 3});
    CHECK_FALSE(res.non_resonant);
    auto trivial = classify_weights(ex.k.specialize(std::vector<Rational>{1, 1, 1, 1}));
    CHECK(trivial.cohomology == std::vector<std::size_t>{1, 4, 5});
}

TEST_CASE("property: random braid words") {
    gen::BraidFamily family;
    const auto& p = family.presentation();
    Example ex;
    gen::Source s(51);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = family.random(s, 4);
        CAPTURE(f.recipe);
        auto rep = universal_representation(p, f.phi, f.cert);
        auto fc = formal_connection(rep.phi);
        auto t = gen::point(s, 4);
        auto lambda = gen::point(s, 4, false);
        for (std::size_t q = 0; q < 3; ++q) {
            const auto& phi = rep.phi[q];
            const auto& omega = fc.omega[q];
            CHECK(evaluate(phi, std::vector<Rational>{1, 1, 1, 1}) == Matrix<Rational>::identity(phi.rows(), Rational(0)));
            CHECK(omega == linear_part(phi));
            if (q < 2) {
                CHECK_NOTHROW(verify_chain_map(ex.k.boundaries[q], phi, rep.phi[q + 1], q));
                CHECK_FALSE(check_chain_map(ex.a.complex.boundaries[q], omega, fc.omega[q + 1]).has_value());
                CHECK_FALSE(check_degree_two_identity(ex.k.boundaries[q], phi, rep.phi[q + 1]).has_value());
            }
            CHECK(verify_exp_relation(phi, omega, 2).spectral);
            auto m = eigen_monomials(phi);
            auto l = eigen_linear_forms(omega, static_cast<std::uint64_t>(trial) + 1);
            CHECK(m.total_multiplicity() == phi.rows());
            CHECK(sorted(m.factors) == sorted(l.factors));
            CHECK(spectra_correspond(m, l));
            CHECK(expand(m, t) == char_poly(evaluate(phi, t)).coeffs);
            CHECK(expand(l, lambda) == char_poly(gauss_manin_matrix(omega, lambda)).coeffs);
        }
        // cohomology eigenvalues are among the monomial values
        auto c = ex.k.specialize(t);
        std::vector<Matrix<Rational>> maps;
        for (const auto& m : rep.phi) maps.push_back(evaluate(m, t));
        auto psi = cohomology_action(c, maps);
        auto m2 = eigen_monomials(rep.phi[2]);
        for (const auto& root : roots_of(psi[2])) {
            bool found = false;
            for (std::size_t i = 0; i < m2.factors.size(); ++i) found = found || m2.value_at(i, t) == root;
            CHECK(found);
        }
    }
}
