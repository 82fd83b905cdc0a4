#pragma once

#include <optional>
#include <vector>

#include "sepvars/groebner.hpp"
#include "sepvars/pairfg.hpp"

namespace sepvars {

// Deliberately naive linear-algebra oracles. They share no code path with
// the main algorithms and serve as independent ground truth in tests.

struct SeparableWitness {
    MPoly cofactor;  // q, integer-primitive with positive leading coefficient
    MPoly multiple;  // q * p, separated
};

// Searches for a cofactor q of total degree <= max_deg such that q*p has no
// term divisible by x*y. Scans the x-degree of q upward, so the returned
// multiple has the least x-degree reachable within the total-degree budget.
std::optional<SeparableWitness> oracle_separable(const MPoly& p, int max_deg);

// Exact basis of the degree slice {(f, g) : deg f <= d, deg g <= d,
// f - g in I} via one normal form per ansatz monomial and a nullspace.
std::vector<PairFG> oracle_algebra_slice(const Ideal& I, int d);

}  // namespace sepvars
