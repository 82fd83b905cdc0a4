#pragma once

#include <set>
#include <vector>

#include "sepvars/unipoly.hpp"

namespace sepvars {

// Outcome of testing which roots of a polynomial are roots of unity.
// When all_roots_of_unity holds, order_lcm = lcm(orders_found) and
// non_cyclotomic_remainder is constant.
struct CyclotomicReport {
    bool all_roots_of_unity = false;
    long order_lcm = 1;
    std::set<long> orders_found;
    UniPoly non_cyclotomic_remainder;
};

// n-th cyclotomic polynomial, by exact division of z^n - 1 by the product of
// the cyclotomic polynomials of the proper divisors of n. Throws on n < 1.
UniPoly cyclotomic(long n);

long euler_phi(long n);

// All n >= 1 with euler_phi(n) <= bound, ascending. phi(n) >= sqrt(n/2) makes
// the scan over n <= 2*bound^2 exhaustive.
std::vector<long> orders_with_phi_at_most(long bound);

// R(z) = Res_x(f(x), f(z*x)): the roots of R are exactly the pairwise ratios
// of the roots of f (deg(f)^2 of them with multiplicity). Requires f
// squarefree with f(0) != 0 and deg f >= 1.
UniPoly ratio_polynomial(const UniPoly& f);

// Strips cyclotomic factors from the squarefree part of R, trying every order
// n with euler_phi(n) <= degree_bound; reports whether the residue is
// constant, the orders found, and their lcm. Throws on R = 0.
CyclotomicReport cyclotomic_report(const UniPoly& R, long degree_bound);

}  // namespace sepvars
