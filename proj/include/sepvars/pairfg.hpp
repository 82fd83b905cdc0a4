#pragma once

#include "sepvars/unipoly.hpp"

namespace sepvars {

// An element (f, g) of K[x] x K[y]: the objects of the separated-polynomial
// algebra. Addition, multiplication and scalar action are component-wise.
struct PairFG {
    UniPoly f, g;

    bool operator==(const PairFG&) const = default;
    PairFG operator+(const PairFG& o) const { return {f + o.f, g + o.g}; }
    PairFG operator-(const PairFG& o) const { return {f - o.f, g - o.g}; }
    PairFG operator*(const PairFG& o) const { return {f * o.f, g * o.g}; }
    PairFG operator*(const Rational& c) const { return {f * c, g * c}; }
    PairFG pow(unsigned long e) const { return {f.pow(e), g.pow(e)}; }
    bool is_zero() const { return f.is_zero() && g.is_zero(); }
};

inline PairFG pair_one() { return {UniPoly(Rational(1)), UniPoly(Rational(1))}; }

// p(a) for a univariate p in a formal variable: component-wise composition
inline PairFG evaluate_at(const UniPoly& p, const PairFG& a) {
    return {p.compose(a.f), p.compose(a.g)};
}

}  // namespace sepvars
