#pragma once

#include <gmpxx.h>
#include <string>

namespace sepvars {

// Exact arbitrary-precision rationals over GMP. All values are kept
// canonical: denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
// GMP arithmetic preserves canonical form; construction from a
// numerator/denominator pair must go through frac().
using Int = mpz_class;
using Rational = mpq_class;

inline Rational frac(const Int& num, const Int& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational frac(long num, long den) { return frac(Int(num), Int(den)); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Rational rat_pow(const Rational& base, unsigned long e) {
    Rational r = 1;
    Rational b = base;
    unsigned long k = e;
    while (k > 0) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace sepvars
