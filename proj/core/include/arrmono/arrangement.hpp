#pragma once

#include "arrmono/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace arrmono {

// offset + normal . u = 0
struct Hyperplane {
    Rational offset;
    std::vector<Rational> normal;
};

// 1-based hyperplane indices, strictly increasing.
using IndexSet = std::vector<int>;

std::string render_index_set(const IndexSet& s);

class Arrangement {
public:
    // Throws InvalidArrangement unless every normal is nonzero of length dim
    // and some dim of the normals are linearly independent.
    Arrangement(std::size_t dim, std::vector<Hyperplane> hyperplanes);

    // "dim l" followed by one "offset a1 ... al" line per hyperplane.
    static Arrangement parse(std::string_view text);
    static Arrangement load(const std::string& path);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return hyperplanes_.size(); }
    const Hyperplane& operator[](std::size_t i) const { return hyperplanes_[i]; }
    const std::vector<Hyperplane>& hyperplanes() const noexcept { return hyperplanes_; }

    std::size_t rank_of(const IndexSet& s) const;
    bool is_dependent(const IndexSet& s) const;
    bool has_nonempty_intersection(const IndexSet& s) const;

    std::string serialize() const;

private:
    std::size_t dim_;
    std::vector<Hyperplane> hyperplanes_;
};

struct DependencyData {
    std::vector<IndexSet> circuits;         // minimal dependent, nonempty intersection
    std::vector<IndexSet> empty_min;        // minimal with empty intersection
    std::vector<IndexSet> broken_circuits;  // C minus min C, one per circuit
};

DependencyData compute_dependencies(const Arrangement& a);

// sets[q] lists the nbc q-sets in lexicographic order; sets[0] = {{}}.
struct NbcBasis {
    std::vector<std::vector<IndexSet>> sets;

    std::vector<std::size_t> betti() const;
    // Position of s within sets[s.size()], or -1.
    long index_of(const IndexSet& s) const;
};

bool contains_subset(const IndexSet& s, const IndexSet& sub);

NbcBasis nbc_basis(const Arrangement& a, const DependencyData& deps);
NbcBasis nbc_basis(const Arrangement& a);

} // namespace arrmono
