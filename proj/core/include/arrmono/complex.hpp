#pragma once

#include "arrmono/elimination.hpp"

#include <span>
#include <vector>

namespace arrmono {

// Finite cochain complex of free modules C^0 -> C^1 -> ... over T.
// boundaries[q] has shape ranks[q] x ranks[q+1] (row-vector convention).
template <class T>
struct RingComplex {
    std::vector<std::size_t> ranks;
    std::vector<Matrix<T>> boundaries;

    std::size_t top_degree() const { return ranks.empty() ? 0 : ranks.size() - 1; }

    // Throws NotAComplex when some boundaries[q] * boundaries[q+1] != 0.
    void verify() const {
        for (std::size_t q = 0; q < boundaries.size(); ++q) {
            const auto& d = boundaries[q];
            if (d.rows() != ranks[q] || d.cols() != ranks[q + 1])
                throw ShapeMismatch("boundary " + std::to_string(q) + " is " + d.shape());
        }
        for (std::size_t q = 0; q + 1 < boundaries.size(); ++q) {
            auto prod = boundaries[q] * boundaries[q + 1];
            if (!prod.is_zero())
                throw NotAComplex("boundary " + std::to_string(q) + " composed with boundary " +
                                  std::to_string(q + 1) + " is nonzero");
        }
    }

    RingComplex<Rational> specialize(std::span<const Rational> point) const {
        RingComplex<Rational> out{ranks, {}};
        for (const auto& d : boundaries) out.boundaries.push_back(evaluate(d, point));
        out.verify();
        return out;
    }
};

// h^q = dim C^q - rank d^q - rank d^{q-1}.
inline std::vector<std::size_t> cohomology_betti(const RingComplex<Rational>& c) {
    c.verify();
    std::vector<std::size_t> rk;
    for (const auto& d : c.boundaries) rk.push_back(rank(d));
    std::vector<std::size_t> h;
    for (std::size_t q = 0; q < c.ranks.size(); ++q) {
        std::size_t out_rank = q < rk.size() ? rk[q] : 0;
        std::size_t in_rank = q > 0 && q - 1 < rk.size() ? rk[q - 1] : 0;
        h.push_back(c.ranks[q] - out_rank - in_rank);
    }
    return h;
}

} // namespace arrmono
