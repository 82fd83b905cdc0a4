#pragma once

#include <optional>

#include "sepvars/mpoly.hpp"
#include "sepvars/pairfg.hpp"

namespace sepvars {

// Why a polynomial was found non-separable; None on a separable result.
enum class NonSepReason {
    none,
    missing_pure_power,        // no pure positive power of x or of y
    leading_part_not_binomial_capable,  // weighted leading part lacks the pure x power
    repeated_roots,            // dehomogenized leading part is not squarefree
    ratio_not_root_of_unity,   // some root ratio is no root of unity
    no_nonconstant_solution,   // the final linear system only contains (1,1)
};

struct PrincipalResult {
    PairFG generator;                 // (1,1) iff trivial
    bool trivial = true;
    NonSepReason reason = NonSepReason::none;
    std::optional<long> n_bound;      // minimal common ratio order, when reached
    std::optional<Weight> weight;     // normalized weight, when computed
};

// Decides separability of p in K[x,y] \ (K[x] ∪ K[y]) and, when separable,
// returns the pair (f, g) of the minimal separated multiple f(x) - g(y),
// normalized to monic f with zero constant term. K[(f,g)] is then the whole
// algebra of separated pairs of <p>.
PrincipalResult minimal_separated_multiple(const MPoly& p);

}  // namespace sepvars
