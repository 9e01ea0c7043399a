#include "arrmono/eigen.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace arrmono {

std::size_t EigenReport::total_multiplicity() const {
    std::size_t t = 0;
    for (const auto& f : factors) t += f.multiplicity;
    return t;
}

LaurentPoly EigenReport::monomial(std::size_t i) const {
    return LaurentPoly::term(Monomial(factors.at(i).exponents), Rational(1));
}

MultiPoly EigenReport::linear_form(std::size_t i) const {
    MultiPoly f(nvars);
    const auto& c = factors.at(i).exponents;
    for (std::size_t j = 0; j < c.size(); ++j)
        if (c[j]) f.add_term(Monomial::unit(nvars, j), Rational(c[j]));
    return f;
}

Rational EigenReport::value_at(std::size_t i, std::span<const Rational> point) const {
    return kind == EigenKind::Monomial ? monomial(i).evaluate(point) : linear_form(i).evaluate(point);
}

std::string EigenReport::render() const {
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += ", ";
        out += kind == EigenKind::Monomial ? monomial(i).render('x') : linear_form(i).render('y');
        out += " (mult " + std::to_string(factors[i].multiplicity) + ")";
    }
    return out;
}

namespace {

std::vector<Integer> integer_coefficients(const CharPoly<Rational>& p) {
    Integer l = 1;
    for (const auto& c : p.coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> out;
    for (const auto& c : p.coeffs) out.push_back(Rational(c * l).get_num());
    return out;
}

std::vector<Integer> divisors(Integer n) {
    n = abs(n);
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Divisors of n built from the given primes only.
std::vector<Integer> smooth_divisors(Integer n, const std::vector<long>& primes) {
    n = abs(n);
    std::vector<Integer> out{Integer(1)};
    for (long p : primes) {
        unsigned e = 0;
        while (n != 0 && n % p == 0) {
            n /= p;
            ++e;
        }
        std::vector<Integer> next;
        for (const auto& d : out) {
            Integer pw = 1;
            for (unsigned k = 0; k <= e; ++k, pw *= p) next.push_back(d * pw);
        }
        out = std::move(next);
    }
    return out;
}

std::vector<long> first_primes(std::size_t count, std::size_t skip = 0) {
    std::vector<long> primes;
    for (long c = 2; primes.size() < count + skip; ++c) {
        bool prime = true;
        for (long p : primes)
            if (c % p == 0) {
                prime = false;
                break;
            }
        if (prime) primes.push_back(c);
    }
    return {primes.begin() + static_cast<long>(skip), primes.end()};
}

// Strips (z - 0) factors, returning their count.
std::size_t strip_zero_roots(CharPoly<Rational>& p) {
    std::size_t k = 0;
    while (p.degree() > 0 && p.coeffs.front() == 0) {
        p.coeffs.erase(p.coeffs.begin());
        ++k;
    }
    return k;
}

template <class T>
CharPoly<Rational> evaluate_char_poly(const CharPoly<T>& p, std::span<const Rational> point) {
    CharPoly<Rational> out;
    for (const auto& c : p.coeffs) out.coeffs.push_back(c.evaluate(point));
    return out;
}

// Monomial x^m with exponents read off from r = prod p_i^{m_i}; nullopt when r
// is not a signed product of the probe primes or is negative.
std::optional<std::vector<int>> exponents_over(const Rational& r, const std::vector<long>& primes) {
    if (r <= 0) return std::nullopt;
    Integer num = r.get_num();
    Integer den = r.get_den();
    std::vector<int> e(primes.size(), 0);
    for (std::size_t i = 0; i < primes.size(); ++i) {
        while (num % primes[i] == 0) {
            num /= primes[i];
            ++e[i];
        }
        while (den % primes[i] == 0) {
            den /= primes[i];
            --e[i];
        }
    }
    if (num != 1 || den != 1) return std::nullopt;
    return e;
}

template <class T>
std::size_t divide_out(CharPoly<T>& p, const T& root) {
    std::size_t k = 0;
    while (p.degree() > 0) {
        auto q = divide_linear(p, root);
        if (!q) break;
        p = std::move(*q);
        ++k;
    }
    return k;
}

void sort_factors(EigenReport& r) {
    std::sort(r.factors.begin(), r.factors.end(), [](const EigenFactor& a, const EigenFactor& b) {
        return Monomial(a.exponents) < Monomial(b.exponents);
    });
}

} // namespace

std::vector<Rational> rational_roots(const CharPoly<Rational>& p_in) {
    CharPoly<Rational> p = p_in;
    std::vector<Rational> roots(strip_zero_roots(p), Rational(0));
    if (p.degree() == 0) return roots;
    auto ints = integer_coefficients(p);
    for (const auto& a : divisors(ints.front())) {
        for (const auto& b : divisors(ints.back())) {
            for (int sign : {1, -1}) {
                Rational r(a * sign, b);
                r.canonicalize();
                if (r.get_den() != b) continue;
                std::size_t k = divide_out(p, r);
                roots.insert(roots.end(), k, r);
                if (p.degree() == 0) break;
            }
            if (p.degree() == 0) break;
        }
        if (p.degree() == 0) break;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

EigenReport eigen_monomials(const Matrix<LaurentPoly>& phi) {
    if (!phi.is_square()) throw ShapeMismatch("eigenvalues of " + phi.shape());
    const std::size_t n = phi.nvars();
    std::vector<Rational> ones(n, Rational(1));
    if (!(evaluate(phi, std::span<const Rational>(ones)) == Matrix<Rational>::identity(phi.rows(), Rational(0))))
        throw NotIdentityAtOne("matrix does not specialize to the identity at x = 1");

    EigenReport report{EigenKind::Monomial, n, {}};
    CharPoly<LaurentPoly> symbolic = char_poly(phi);
    const auto primes = first_primes(n);
    std::vector<Rational> probe(primes.begin(), primes.end());
    CharPoly<Rational> at_probe = evaluate_char_poly(symbolic, std::span<const Rational>(probe));

    // Candidate numerators and denominators are products of probe primes.
    auto ints = integer_coefficients(at_probe);
    if (ints.front() == 0) throw NonIntegerRootAtProbe("zero eigenvalue at the prime probe");
    auto nums = smooth_divisors(ints.front(), primes);
    auto dens = smooth_divisors(ints.back(), primes);
    for (const auto& a : nums) {
        for (const auto& b : dens) {
            if (at_probe.degree() == 0) break;
            if (gcd(a, b) != 1) continue;
            Rational r(a, b);
            std::size_t k = divide_out(at_probe, r);
            if (k == 0) continue;
            auto e = exponents_over(r, primes);
            LaurentPoly root = LaurentPoly::term(Monomial(*e), Rational(1));
            std::size_t certified = divide_out(symbolic, root);
            if (certified != k)
                throw FactorizationFailed("candidate " + root.render('x') + " has multiplicity " + std::to_string(k) +
                                          " at the probe but divides the characteristic polynomial " +
                                          std::to_string(certified) + " times");
            report.factors.push_back(EigenFactor{*e, k});
        }
    }
    if (at_probe.degree() > 0)
        throw NonIntegerRootAtProbe(std::to_string(at_probe.degree()) +
                                    " eigenvalues at the prime probe are not products of the probe primes");
    if (symbolic.degree() > 0) throw FactorizationFailed("unfactored remainder of degree " + std::to_string(symbolic.degree()));

    // Cross-check at a second prime probe.
    const auto second = first_primes(n, n);
    std::vector<Rational> probe2(second.begin(), second.end());
    auto at_second = evaluate_char_poly(char_poly(phi), std::span<const Rational>(probe2));
    for (std::size_t i = 0; i < report.factors.size(); ++i)
        if (at_second.evaluate(report.value_at(i, probe2)) != 0)
            throw FactorizationFailed("second probe rejects " + report.monomial(i).render('x'));
    sort_factors(report);
    return report;
}

EigenReport eigen_linear_forms(const Matrix<MultiPoly>& omega, std::uint64_t seed) {
    if (!omega.is_square()) throw ShapeMismatch("eigenvalues of " + omega.shape());
    const std::size_t n = omega.nvars();
    for (std::size_t i = 0; i < omega.rows(); ++i)
        for (std::size_t j = 0; j < omega.cols(); ++j)
            if (!omega(i, j).is_integral_linear_form())
                throw FactorizationFailed("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                          ") is not an integral linear form: " + omega(i, j).render('y'));

    EigenReport report{EigenKind::LinearForm, n, {}};
    CharPoly<MultiPoly> symbolic = char_poly(omega);

    // Distinct integer roots per unit vector: the possible j-th coefficients.
    std::vector<std::vector<int>> coordinate_roots(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rational> e(n, Rational(0));
        e[j] = 1;
        auto roots = rational_roots(evaluate_char_poly(symbolic, std::span<const Rational>(e)));
        if (roots.size() != omega.rows())
            throw FactorizationFailed("characteristic polynomial at e_" + std::to_string(j + 1) +
                                      " has roots outside Q");
        std::set<int> distinct;
        for (const auto& r : roots) {
            if (r.get_den() != 1 || !r.get_num().fits_sint_p())
                throw FactorizationFailed("non-integer root " + to_string(r) + " at e_" + std::to_string(j + 1));
            distinct.insert(static_cast<int>(r.get_num().get_si()));
        }
        coordinate_roots[j].assign(distinct.begin(), distinct.end());
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> draw(1, 1000003);
    std::vector<Rational> generic;
    for (std::size_t j = 0; j < n; ++j) generic.emplace_back(draw(rng), draw(rng));
    for (auto& g : generic) g.canonicalize();
    CharPoly<Rational> at_generic = evaluate_char_poly(symbolic, std::span<const Rational>(generic));

    // Odometer over the product of coordinate root sets.
    std::vector<std::size_t> idx(n, 0);
    bool done = symbolic.degree() == 0;
    while (!done) {
        std::vector<int> c(n);
        Rational value = 0;
        for (std::size_t j = 0; j < n; ++j) {
            c[j] = coordinate_roots[j][idx[j]];
            value += generic[j] * c[j];
        }
        if (at_generic.evaluate(value) == 0) {
            MultiPoly form(n);
            for (std::size_t j = 0; j < n; ++j)
                if (c[j]) form.add_term(Monomial::unit(n, j), Rational(c[j]));
            std::size_t k = divide_out(symbolic, form);
            if (k > 0) {
                for (std::size_t r = 0; r < k; ++r) at_generic = *divide_linear(at_generic, value);
                report.factors.push_back(EigenFactor{c, k});
            }
        }
        if (symbolic.degree() == 0) break;
        std::size_t j = 0;
        while (j < n && ++idx[j] == coordinate_roots[j].size()) idx[j++] = 0;
        done = j == n;
    }
    if (symbolic.degree() > 0)
        throw FactorizationFailed("no integral linear form certifies the remaining degree " +
                                  std::to_string(symbolic.degree()) + " factor");
    sort_factors(report);
    return report;
}

bool spectra_correspond(const EigenReport& monomials, const EigenReport& forms) {
    for (const auto& m : monomials.factors) {
        auto it = std::find_if(forms.factors.begin(), forms.factors.end(),
                               [&](const EigenFactor& f) { return f.exponents == m.exponents; });
        if (it == forms.factors.end() || it->multiplicity < m.multiplicity) return false;
    }
    return true;
}

} // namespace arrmono
