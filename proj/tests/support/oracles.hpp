#pragma once

// Reference implementations that share no code with the library beyond the
// number types. They are deliberately naive: textbook elimination, cofactor
// expansion, explicit exterior algebra, Taylor series in one variable.

#include "arrmono/arrangement.hpp"
#include "arrmono/matrix.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using arrmono::Rational;
using Dense = std::vector<std::vector<Rational>>;

inline Dense dense(const arrmono::Matrix<Rational>& m) {
    Dense d(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m(i, j);
    return d;
}

// Row echelon with division, partial search for the first nonzero pivot.
inline std::size_t rank(Dense a) {
    std::size_t r = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            if (a[i][c] == 0) continue;
            Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

inline Rational cofactor_determinant(const Dense& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    Rational total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a[0][j] == 0) continue;
        Dense minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Rational> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(a[i][k]);
            minor.push_back(std::move(row));
        }
        Rational term = a[0][j] * cofactor_determinant(minor);
        total += (j % 2 ? -term : term);
    }
    return total;
}

// Taylor coefficients in s of p(exp(s*y)) at a fixed rational y, through s^cap.
inline std::vector<Rational> exp_taylor(const arrmono::LaurentPoly& p, const std::vector<Rational>& y, int cap) {
    std::vector<Rational> out(static_cast<std::size_t>(cap) + 1, Rational(0));
    for (const auto& [m, c] : p.terms()) {
        Rational rate = 0;
        for (std::size_t j = 0; j < y.size(); ++j) rate += Rational(m[j]) * y[j];
        Rational term = c;  // c * rate^k / k!
        for (int k = 0; k <= cap; ++k) {
            out[static_cast<std::size_t>(k)] += term;
            term = term * rate / Rational(k + 1);
        }
    }
    return out;
}

// ---- exterior algebra on n generators, basis = increasing index sets ----

using Set = std::vector<int>;
using Vec = std::map<Set, Rational>;

// e_u ^ e_v as (sign, union); sign 0 when u and v overlap. Computed by
// bubble-sorting the concatenation and counting swaps.
inline std::pair<int, Set> wedge(const Set& u, const Set& v) {
    Set w = u;
    w.insert(w.end(), v.begin(), v.end());
    int sign = 1;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j + 1 < w.size() - i; ++j) {
            if (w[j] == w[j + 1]) return {0, {}};
            if (w[j] > w[j + 1]) {
                std::swap(w[j], w[j + 1]);
                sign = -sign;
            }
        }
    return {sign, w};
}

inline std::vector<Set> subsets(int n, std::size_t k) {
    std::vector<Set> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
        Set s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s.push_back(i + 1);
        out.push_back(s);
    }
    return out;
}

// Spanning set of the Orlik-Solomon ideal in degree q, from the textbook
// definition: e_U ^ d(e_S) for every dependent S meeting in a point or line,
// and e_U ^ e_S for every S with empty intersection.
inline std::vector<Vec> os_ideal(const arrmono::Arrangement& a, std::size_t q) {
    const int n = static_cast<int>(a.size());
    std::vector<Vec> gens;
    for (std::size_t k = 1; k <= static_cast<std::size_t>(n); ++k) {
        for (const auto& s : subsets(n, k)) {
            bool empty = !a.has_nonempty_intersection(s);
            bool dependent = a.is_dependent(s);
            if (!empty && !dependent) continue;
            std::size_t out_degree = empty ? k : k - 1;
            if (out_degree > q) continue;
            for (const auto& u : subsets(n, q - out_degree)) {
                Vec v;
                if (empty) {
                    auto [sg, w] = wedge(u, s);
                    if (sg) v[w] += sg;
                } else {
                    for (std::size_t m = 0; m < s.size(); ++m) {
                        Set face = s;
                        face.erase(face.begin() + static_cast<long>(m));
                        auto [sg, w] = wedge(u, face);
                        if (sg) v[w] += Rational(m % 2 ? -sg : sg);
                    }
                }
                std::erase_if(v, [](const auto& kv) { return kv.second == 0; });
                if (!v.empty()) gens.push_back(v);
            }
        }
    }
    return gens;
}

inline std::size_t span_rank(const std::vector<Vec>& vecs, const std::vector<Set>& basis) {
    Dense d;
    for (const auto& v : vecs) {
        std::vector<Rational> row(basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j) {
            auto it = v.find(basis[j]);
            if (it != v.end()) row[j] = it->second;
        }
        d.push_back(row);
    }
    return rank(d);
}

// dim of the degree-q Orlik-Solomon space E^q / I^q.
inline std::size_t os_dimension(const arrmono::Arrangement& a, std::size_t q) {
    auto basis = subsets(static_cast<int>(a.size()), q);
    return basis.size() - span_rank(os_ideal(a, q), basis);
}

// True when `v` lies in I^q, i.e. represents zero in the OS algebra.
inline bool in_os_ideal(const arrmono::Arrangement& a, std::size_t q, const Vec& v) {
    auto basis = subsets(static_cast<int>(a.size()), q);
    auto gens = os_ideal(a, q);
    std::size_t before = span_rank(gens, basis);
    gens.push_back(v);
    return span_rank(gens, basis) == before;
}

// Betti numbers of a line arrangement from its intersection points:
// b0 = 1, b1 = n, b2 = sum over points of (multiplicity - 1).
inline std::vector<std::size_t> line_arrangement_betti(const arrmono::Arrangement& a) {
    std::set<std::pair<Rational, Rational>> points;
    std::map<std::pair<Rational, Rational>, std::size_t> multiplicity;
    const auto& h = a.hyperplanes();
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = i + 1; j < h.size(); ++j) {
            Rational det = h[i].normal[0] * h[j].normal[1] - h[i].normal[1] * h[j].normal[0];
            if (det == 0) continue;
            // a.u = -offset for both lines, Cramer's rule
            Rational u1 = (-h[i].offset * h[j].normal[1] + h[j].offset * h[i].normal[1]) / det;
            Rational u2 = (-h[j].offset * h[i].normal[0] + h[i].offset * h[j].normal[0]) / det;
            points.insert({u1, u2});
        }
    std::size_t b2 = 0;
    for (const auto& p : points) {
        std::size_t m = 0;
        for (const auto& hp : h)
            if (hp.offset + hp.normal[0] * p.first + hp.normal[1] * p.second == 0) ++m;
        b2 += m - 1;
    }
    return {1, h.size(), b2};
}

} // namespace oracle
