#include "arrmono/os_complex.hpp"

#include <algorithm>

namespace arrmono {

int koszul_sign(const IndexSet& t, const IndexSet& u) {
    std::size_t inversions = 0;
    for (int a : t)
        for (int b : u)
            if (a > b) ++inversions;
    return inversions % 2 ? -1 : 1;
}

namespace {

bool has_common(const IndexSet& a, const IndexSet& b) {
    for (int v : a)
        if (std::binary_search(b.begin(), b.end(), v)) return true;
    return false;
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

IndexSet set_minus(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

const IndexSet* largest_broken_circuit_in(const IndexSet& s, const DependencyData& deps) {
    const IndexSet* best = nullptr;
    for (const auto& bc : deps.broken_circuits)
        if (contains_subset(s, bc) && (!best || *best < bc)) best = &bc;
    return best;
}

const IndexSet& circuit_for(const IndexSet& broken, const DependencyData& deps) {
    for (const auto& c : deps.circuits)
        if (IndexSet(c.begin() + 1, c.end()) == broken) return c;
    throw std::logic_error("broken circuit without circuit");
}

} // namespace

OSElement reduce_to_nbc(const IndexSet& s, const DependencyData& deps) {
    OSElement out{s.size(), {}};
    std::map<IndexSet, Rational> pending{{s, Rational(1)}};
    auto vanishes = [&](const IndexSet& x) {
        return std::any_of(deps.empty_min.begin(), deps.empty_min.end(),
                           [&](const IndexSet& e) { return contains_subset(x, e); });
    };
    while (!pending.empty()) {
        auto it = std::prev(pending.end());
        IndexSet x = it->first;
        Rational coeff = it->second;
        pending.erase(it);
        if (coeff == 0 || vanishes(x)) continue;
        const IndexSet* t = largest_broken_circuit_in(x, deps);
        if (!t) {
            Rational& slot = out.coefficients[x];
            slot += coeff;
            if (slot == 0) out.coefficients.erase(x);
            continue;
        }
        const IndexSet& c = circuit_for(*t, deps);
        IndexSet rest = set_minus(x, *t);
        // a_X = eps * a_T ^ a_rest and a_T = sum_{m>=2} (-1)^m a_{C \ c_m}.
        int eps = koszul_sign(*t, rest);
        for (std::size_t m = 1; m < c.size(); ++m) {
            IndexSet face = set_minus(c, IndexSet{c[m]});
            if (has_common(face, rest)) continue;
            int sign = eps * (m % 2 == 0 ? -1 : 1) * koszul_sign(face, rest);
            pending[set_union(face, rest)] += coeff * sign;
        }
    }
    return out;
}

AomotoComplex aomoto_complex(const Arrangement& a) {
    auto deps = compute_dependencies(a);
    auto basis = nbc_basis(a, deps);
    return aomoto_complex(a, deps, basis);
}

AomotoComplex aomoto_complex(const Arrangement& a, const DependencyData& deps, const NbcBasis& basis) {
    const std::size_t n = a.size();
    const MultiPoly zero(n);
    AomotoComplex out{basis, {basis.betti(), {}}};
    for (std::size_t q = 0; q + 1 < basis.sets.size(); ++q) {
        const auto& rows = basis.sets[q];
        const auto& cols = basis.sets[q + 1];
        Matrix<MultiPoly> mu(rows.size(), cols.size(), zero);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (int j = 1; j <= static_cast<int>(n); ++j) {
                if (std::binary_search(rows[i].begin(), rows[i].end(), j)) continue;
                int sign = koszul_sign(IndexSet{j}, rows[i]);
                auto expansion = reduce_to_nbc(set_union(IndexSet{j}, rows[i]), deps);
                for (const auto& [set, coeff] : expansion.coefficients) {
                    long col = basis.index_of(set);
                    mu(i, static_cast<std::size_t>(col)) +=
                        MultiPoly::variable(n, static_cast<std::size_t>(j - 1)) * (coeff * sign);
                }
            }
        }
        out.complex.boundaries.push_back(std::move(mu));
    }
    out.complex.verify();
    return out;
}

} // namespace arrmono
