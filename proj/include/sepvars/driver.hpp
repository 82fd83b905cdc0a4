#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sepvars/groebner.hpp"
#include "sepvars/principal.hpp"
#include "sepvars/zerodim.hpp"

namespace sepvars {

// Full output of the separation pipeline. certificates holds the univariate
// polynomials (in a formal variable) whose evaluations at `a` produced the
// generators, when the principal/zero-dimensional intersection path ran.
struct SeparationResult {
    std::vector<PairFG> generators;
    std::optional<PairFG> a;
    std::vector<UniPoly> certificates;
};

// Basis of { p : p(a) in the algebra of data's ideal, support(p) ⊆ S }:
// powers a^s are projected to V, and the kernel of their coordinate matrix
// is returned as polynomials c_1 t^{s_1} + ... + c_m t^{s_m}. The basis is
// echelonized by top degree (distinct degrees, ascending) and each element
// is integer-primitive with positive leading coefficient.
std::vector<UniPoly> restricted_search(const PairFG& a, const ZeroDimAlgebra& data,
                                       const std::vector<long>& S);

// Generators of the algebra of separated pairs {(f, g) : f - g in I} for an
// arbitrary bivariate ideal. Every returned pair is membership-checked.
SeparationResult separate(const Ideal& I, int loop_cap = 100);

// Necessary-condition projection for a multivariate polynomial p: substitute
// the x-block and y-block variables by univariate images and decide
// separability of the bivariate image.
enum class ProjectionOutcome {
    certified_not_separable,   // image is not separable, hence neither is p
    inconclusive_separable,    // image is separable; no conclusion about p
    inconclusive_univariate,   // image lost one variable block entirely
};

struct ProjectionReport {
    ProjectionOutcome outcome;
    MPoly image;
    std::optional<PairFG> image_multiple;  // when the image is separable

    // false means certified non-separable; true is no conclusion
    bool possibly_separable() const {
        return outcome != ProjectionOutcome::certified_not_separable;
    }
};

// x_block_images[i] is the image (a polynomial in x) of the i-th x-block
// variable, likewise y_block_images over y. p's ring must order the x-block
// variables before the y-block ones.
ProjectionReport projected_separability(const MPoly& p, int n_x_vars,
                                        const std::vector<UniPoly>& x_block_images,
                                        const std::vector<UniPoly>& y_block_images);

}  // namespace sepvars
