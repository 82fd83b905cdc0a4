#pragma once

#include "sepvars/groebner.hpp"

namespace sepvars {

// A verified decomposition I = <h> ∩ I0 with I0 zero-dimensional (or <1>)
// and h the gcd of the generators. s records the power of the cofactor
// ideal that was adjoined to reach a valid split.
struct Split {
    MPoly h;
    Ideal i0;
    int s = 1;
};

// Splits a proper bivariate ideal: h := gcd of all generators,
// J := <g/h for each generator g>, and I0 := I + J^s for the least s in the
// doubling schedule 1, 2, 4, ... with ideal_equals(I, intersect(<h>, I0)).
// The equality and the zero-dimensionality of I0 are asserted before
// returning. Throws on the zero or unit ideal, or past the schedule cap.
Split split(const Ideal& I, int s_cap = 64);

}  // namespace sepvars
