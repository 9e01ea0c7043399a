#include "arrmono/matrix.hpp"
#include "arrmono/text.hpp"
#include "generators.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace arrmono;

namespace {

LaurentPoly lx(const char* s) { return parse_laurent(s, 4); }
MultiPoly my(const char* s) { return parse_multipoly(s, 4); }

} // namespace

TEST_CASE("rationals are canonical") {
    Rational r = parse_rational("-6/4");
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 2);
    CHECK(to_string(parse_rational("0/7")) == "0");
    CHECK(parse_rational("0/7").get_den() == 1);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}

TEST_CASE("zero coefficients are never stored") {
    auto p = lx("x1 + x2 - x1");
    CHECK(p.size() == 1);
    CHECK((p - p).is_zero());
    CHECK((p - p).size() == 0);
}

TEST_CASE("canonical order is degree first then x1 before x2") {
    auto p = lx("x2 + x1 + 1 + x1*x2 + x1^2");
    CHECK(p.render('x') == "1 + x1 + x2 + x1^2 + x1*x2");
}

TEST_CASE("ordinary polynomials reject negative exponents") {
    CHECK_THROWS(parse_multipoly("y1^-1", 4));
    CHECK_NOTHROW(parse_laurent("x1^-1", 4));
}

TEST_CASE("evaluation") {
    std::vector<Rational> t{2, 3, 5, 7};
    CHECK(lx("x1 x2").evaluate(t) == 6);
    CHECK(lx("x1 - 1").evaluate(std::vector<Rational>{1, 1, 1, 1}) == 0);
    CHECK(my("y1 + y2").evaluate(t) == 5);
    CHECK(lx("x1^-2").evaluate(t) == Rational(1, 4));
    CHECK_THROWS_AS(lx("x1^-1").evaluate(std::vector<Rational>{0, 1, 1, 1}), ZeroAtPole);
    CHECK_THROWS_AS(lx("x1").evaluate(std::vector<Rational>{1, 1}), ShapeMismatch);
}

TEST_CASE("exp_substitute small cases") {
    auto s = exp_substitute(lx("x1"), 2);
    CHECK(s.part(0) == my("1"));
    CHECK(s.part(1) == my("y1"));
    CHECK(s.part(2) == my("1/2 y1^2"));
    auto d = exp_substitute(lx("x1 - 1"), 1);
    CHECK(d.part(0).is_zero());
    CHECK(d.part(1) == my("y1"));
    auto m = exp_substitute(lx("x1 x2"), 2);
    CHECK(m.total() == my("1 + y1 + y2 + 1/2 y1^2 + y1 y2 + 1/2 y2^2"));
    auto inv = exp_substitute(lx("x3^-1"), 2);
    CHECK(inv.total() == my("1 - y3 + 1/2 y3^2"));
}

TEST_CASE("linear_part") {
    CHECK(linear_part(lx("x3 - x2 x3")) == my("-y2"));
    CHECK(linear_part(lx("1 - x4")) == my("-y4"));
    CHECK(linear_part(lx("1")).is_zero());
    for (int m = -4; m <= 4; ++m) {
        auto p = LaurentPoly::variable(4, 2, m);
        CHECK(linear_part(p) == MultiPoly::variable(4, 2) * Rational(m));
    }
    auto lin = linearize(lx("3 + x1 x2^-1"));
    CHECK(lin.constant == 4);
    CHECK(lin.linear == my("y1 - y2"));
}

TEST_CASE("divide_exact") {
    CHECK(divide_exact(my("y1^2 - y2^2"), my("y1 + y2")) == my("y1 - y2"));
    CHECK_FALSE(divide_exact(my("y1^2 + y2^2"), my("y1 + y2")).has_value());
    CHECK(divide_exact(lx("x1^2 x2^-1 - x2^-1"), lx("x1 - 1")) == lx("x1 x2^-1 + x2^-1"));
    CHECK(divide_exact(lx("1"), lx("x3")) == lx("x3^-1"));
    CHECK_FALSE(divide_exact(lx("1"), lx("1 - x3")).has_value());
}

TEST_CASE("property: ring axioms on random polynomials") {
    gen::Source s(101);
    for (int trial = 0; trial < 60; ++trial) {
        auto p = gen::poly<PolyKind::Laurent>(s, 3, 4, 2, true);
        auto q = gen::poly<PolyKind::Laurent>(s, 3, 4, 2, true);
        auto r = gen::poly<PolyKind::Laurent>(s, 3, 4, 2, true);
        CHECK((p + q) * r == p * r + q * r);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        auto t = gen::point(s, 3);
        CHECK((p * q).evaluate(t) == p.evaluate(t) * q.evaluate(t));
    }
}

TEST_CASE("property: exp_substitute is multiplicative up to truncation") {
    gen::Source s(202);
    for (int trial = 0; trial < 40; ++trial) {
        auto p = gen::poly<PolyKind::Laurent>(s, 3, 3, 2, true);
        auto q = gen::poly<PolyKind::Laurent>(s, 3, 3, 2, true);
        for (int cap : {0, 1, 2, 3}) {
            auto lhs = exp_substitute(p * q, cap);
            auto rhs = exp_substitute(p, cap) * exp_substitute(q, cap);
            CHECK(lhs.total() == rhs.total());
        }
    }
}

TEST_CASE("property: exp_substitute agrees with a one-variable Taylor oracle") {
    gen::Source s(303);
    for (int trial = 0; trial < 40; ++trial) {
        auto p = gen::poly<PolyKind::Laurent>(s, 3, 4, 3, true);
        auto y = gen::point(s, 3, false);
        const int cap = 4;
        auto series = exp_substitute(p, cap);
        auto taylor = oracle::exp_taylor(p, y, cap);
        // the degree-k part is homogeneous, so at s*y it contributes s^k * part_k(y)
        for (int k = 0; k <= cap; ++k) CHECK(series.part(k).evaluate(y) == taylor[static_cast<std::size_t>(k)]);
    }
}

TEST_CASE("truncated series parts stay homogeneous") {
    gen::Source s(404);
    for (int trial = 0; trial < 20; ++trial) {
        auto p = gen::poly<PolyKind::Laurent>(s, 2, 3, 2, true);
        auto series = exp_substitute(p, 3);
        for (int k = 0; k <= 3; ++k)
            for (const auto& [m, c] : series.part(k).terms()) CHECK(m.degree() == k);
    }
}
