#pragma once

#include <vector>

#include "sepvars/groebner.hpp"
#include "sepvars/pairfg.hpp"

namespace sepvars {

// Data describing the separated-polynomial algebra of a zero-dimensional
// bivariate ideal: eliminants p (in x) and q (in y), the row-reduced basis
// pairs (f_i, g_i) with pairwise distinct deg f_i, and the exponent supports
// of the complement space V. For the unit ideal p = q = 1 and everything
// else is empty (V = {0}).
struct ZeroDimAlgebra {
    Ideal ideal;
    UniPoly p, q;
    std::vector<PairFG> basis_pairs;       // ascending deg f_i, each f_i monic
    std::vector<int> v_exponents_x;        // {k < deg p : k is no f_i degree}
    std::vector<int> v_exponents_y;        // {0, ..., deg q - 1}
    bool unit_ideal = false;

    int dim_v() const {
        return static_cast<int>(v_exponents_x.size() + v_exponents_y.size());
    }
};

struct ZeroDimResult {
    std::vector<PairFG> generators;
    ZeroDimAlgebra data;
};

// Algebra generators of the separated pairs of a zero-dimensional ideal,
// found by eliminating to p and q and solving the linear system of the
// bounded-degree ansatz. Requires is_zero_dimensional(I).
ZeroDimResult zero_dim_algebra(const Ideal& I);

// Projection onto V along the algebra: returns the unique (f~, g~) supported
// on V's exponents with (f, g) - (f~, g~) in the algebra. Q-linear and
// idempotent; the zero pair exactly on algebra members.
PairFG reduce_to_v(const PairFG& pair, const ZeroDimAlgebra& data);

}  // namespace sepvars
