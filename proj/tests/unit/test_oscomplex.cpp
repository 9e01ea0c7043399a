#include "arrmono/complex.hpp"
#include "arrmono/os_complex.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "expected.hpp"

#include <doctest.h>

using namespace arrmono;

namespace {

Arrangement example() { return Arrangement::load(expected::data("arrangement.txt")); }

oracle::Vec as_vec(const OSElement& e) {
    oracle::Vec v;
    for (const auto& [s, c] : e.coefficients) v[s] = c;
    return v;
}

long euler(const std::vector<std::size_t>& h) {
    long e = 0;
    for (std::size_t q = 0; q < h.size(); ++q) e += (q % 2 ? -1 : 1) * static_cast<long>(h[q]);
    return e;
}

} // namespace

TEST_CASE("koszul signs") {
    CHECK(koszul_sign({1}, {2}) == 1);
    CHECK(koszul_sign({2}, {1}) == -1);
    CHECK(koszul_sign({3}, {1, 2}) == 1);
    CHECK(koszul_sign({2, 4}, {1, 3}) == -1);
}

TEST_CASE("reduce_to_nbc on the example") {
    auto deps = compute_dependencies(example());
    auto r = reduce_to_nbc({2, 3}, deps);
    CHECK(r.coefficients == std::map<IndexSet, Rational>{{{1, 2}, -1}, {{1, 3}, 1}});
    CHECK(reduce_to_nbc({1, 2, 4}, deps).coefficients.empty());
    CHECK(reduce_to_nbc({1, 2}, deps).coefficients == std::map<IndexSet, Rational>{{{1, 2}, 1}});
}

TEST_CASE("property: reduce_to_nbc differs from a_S by an element of the OS ideal") {
    gen::Source s(31);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = gen::line_arrangement(s);
        auto deps = compute_dependencies(a);
        for (std::size_t q = 1; q <= 3; ++q)
            for (const auto& set : oracle::subsets(static_cast<int>(a.size()), q)) {
                auto v = as_vec(reduce_to_nbc(set, deps));
                for (auto& [k, c] : v) c = -c;
                v[set] += 1;
                std::erase_if(v, [](const auto& kv) { return kv.second == 0; });
                CHECK(oracle::in_os_ideal(a, q, v));
            }
    }
}

TEST_CASE("Aomoto complex of the example") {
    auto ac = aomoto_complex(example());
    REQUIRE(ac.complex.boundaries.size() == 2);
    CHECK(ac.complex.boundaries[0] == expected::poly(expected::kMu0));
    CHECK(ac.complex.boundaries[1] == expected::poly(expected::kMu1));
    CHECK(ac.complex.ranks == std::vector<std::size_t>{1, 4, 5});
    for (const auto& mu : ac.complex.boundaries)
        for (std::size_t i = 0; i < mu.rows(); ++i)
            for (std::size_t j = 0; j < mu.cols(); ++j) CHECK(mu(i, j).is_integral_linear_form());
}

TEST_CASE("Aomoto complex of the boolean arrangement") {
    auto ac = aomoto_complex(Arrangement::parse("dim 2\n0 1 0\n0 0 1\n"));
    CHECK(ac.complex.boundaries[1] == parse_multipoly_matrix("-y2\ny1\n", 2));
}

TEST_CASE("specializations of the example complexes") {
    auto ac = aomoto_complex(example());
    std::vector<Rational> zero{0, 0, 0, 0};
    auto at0 = ac.complex.specialize(zero);
    for (const auto& d : at0.boundaries) CHECK(d.is_zero());
    CHECK(cohomology_betti(at0) == std::vector<std::size_t>{1, 4, 5});

    RingComplex<LaurentPoly> k{{1, 4, 5}, {expected::laurent(expected::kDelta0), expected::laurent(expected::kDelta1)}};
    auto at1 = k.specialize(std::vector<Rational>{1, 1, 1, 1});
    for (const auto& d : at1.boundaries) CHECK(d.is_zero());
    auto at2 = k.specialize(std::vector<Rational>{2, 2, 2, 2});
    CHECK(oracle::rank(oracle::dense(at2.boundaries[0])) == 1);
    CHECK(oracle::rank(oracle::dense(at2.boundaries[1])) == 3);
    CHECK(cohomology_betti(at2) == std::vector<std::size_t>{0, 0, 2});
    auto res = k.specialize(std::vector<Rational>{2, 3, Rational(1, 6), 1});
    CHECK(cohomology_betti(res) == std::vector<std::size_t>{0, 1, 3});
}

TEST_CASE("cohomology_betti rejects a non-complex") {
    Matrix<Rational> d0(1, 1, Rational(1));
    Matrix<Rational> d1(1, 1, Rational(1));
    RingComplex<Rational> c{{1, 1, 1}, {d0, d1}};
    CHECK_THROWS_AS(cohomology_betti(c), NotAComplex);
}

TEST_CASE("property: random Aomoto complexes") {
    gen::Source s(32);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = gen::line_arrangement(s);
        auto deps = compute_dependencies(a);
        auto nbc = nbc_basis(a, deps);
        auto ac = aomoto_complex(a, deps, nbc);
        const auto& mu = ac.complex.boundaries;
        CHECK((mu[0] * mu[1]).is_zero());
        for (const auto& m : mu)
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) CHECK(m(i, j).is_integral_linear_form());

        // each row of mu^1 is y_j a_j ^ a_S rewritten; compare per variable with the exterior oracle
        for (std::size_t row = 0; row < nbc.sets[1].size(); ++row) {
            const auto& set = nbc.sets[1][row];
            for (std::size_t j = 1; j <= a.size(); ++j) {
                auto [sign, w] = oracle::wedge({static_cast<int>(j)}, set);
                oracle::Vec v;
                if (sign) v[w] += sign;
                for (std::size_t col = 0; col < nbc.sets[2].size(); ++col) {
                    Rational c = mu[1](row, col).coefficient(Monomial::unit(a.size(), j - 1));
                    if (c != 0) v[nbc.sets[2][col]] -= c;
                }
                std::erase_if(v, [](const auto& kv) { return kv.second == 0; });
                CHECK(oracle::in_os_ideal(a, 2, v));
            }
        }

        auto b = nbc.betti();
        auto h0 = cohomology_betti(ac.complex.specialize(std::vector<Rational>(a.size(), Rational(0))));
        CHECK(h0 == b);
        auto generic = cohomology_betti(ac.complex.specialize(gen::point(s, a.size(), false)));
        CHECK(euler(generic) == euler(b));
        CHECK(euler(b) == 1 - static_cast<long>(a.size()) + static_cast<long>(oracle::line_arrangement_betti(a)[2]));
    }
}
