#pragma once

#include "arrmono/arrangement.hpp"
#include "arrmono/complex.hpp"

#include <map>

namespace arrmono {

// Element of the Orlik-Solomon algebra in one degree; keys are nbc sets.
struct OSElement {
    std::size_t degree = 0;
    std::map<IndexSet, Rational> coefficients;

    bool operator==(const OSElement&) const = default;
};

// Sign of a_T ^ a_U relative to a_{T u U} for disjoint increasing T, U:
// (-1)^{#{(t,u) : t > u}}.
int koszul_sign(const IndexSet& t, const IndexSet& u);

// Class of a_S in the nbc basis. Sets containing an empty_min member vanish.
// Otherwise the lexicographically largest non-nbc set of the running
// combination is rewritten through the relation
//   sum_m (-1)^{m-1} a_{C \ c_m} = 0   (C a circuit, T = C \ min C)
// solved for a_T. Every replacement swaps some c_m for min C < c_m, so the
// rewritten sets are lexicographically smaller and the loop terminates.
OSElement reduce_to_nbc(const IndexSet& s, const DependencyData& deps);

struct AomotoComplex {
    NbcBasis basis;
    RingComplex<MultiPoly> complex;  // boundaries mu^q over Q[y_1..y_n]
};

// Row i of mu^q is the nbc expansion of sum_j y_j a_j ^ a_{S_i}.
AomotoComplex aomoto_complex(const Arrangement& a);
AomotoComplex aomoto_complex(const Arrangement& a, const DependencyData& deps, const NbcBasis& basis);

} // namespace arrmono
