#pragma once

#include <set>
#include <vector>

namespace sepvars {

// Numerical semigroup generated by a set of positive integers.
struct Semigroup {
    std::set<long> gens;
    explicit Semigroup(std::set<long> g);
    Semigroup(std::initializer_list<long> g) : Semigroup(std::set<long>(g)) {}
};

long semigroup_gcd(const Semigroup& s);  // 0 for the empty set

bool semigroup_member(long n, const Semigroup& s);

// the finite complement of the semigroup in N; requires gcd = 1
std::set<long> gaps(const Semigroup& s);

// largest gap; requires gcd = 1, returns -1 when 1 is a generator
long frobenius(const Semigroup& s);

// first k elements of N \ <gens> in increasing order; also defined when the
// complement is infinite (gcd != 1 or no generators)
std::vector<long> first_gaps(const Semigroup& s, int k);

}  // namespace sepvars
