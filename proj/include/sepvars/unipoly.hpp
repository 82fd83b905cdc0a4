#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sepvars/rational.hpp"

namespace sepvars {

// Dense univariate polynomial over Q. coeffs_[i] is the coefficient of the
// i-th power; the highest stored coefficient is nonzero. The zero polynomial
// stores nothing and reports degree -1 (the "minus infinity" marker).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(const Rational& c);
    explicit UniPoly(long c) : UniPoly(Rational(c)) {}
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly monomial(int exp, const Rational& c = 1);
    static UniPoly variable() { return monomial(1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    Rational coeff(int i) const;
    const Rational& leading_coeff() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rational& c) const;
    bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

    UniPoly shifted(int k) const;  // multiply by x^k
    UniPoly pow(unsigned long e) const;
    UniPoly derivative() const;
    Rational eval(const Rational& x) const;
    UniPoly compose(const UniPoly& inner) const;  // this(inner)

    UniPoly monic() const;               // error on zero
    Rational content() const;            // gcd of numerators / lcm of denominators, sign of lc
    UniPoly primitive_part() const;      // this / content

private:
    std::vector<Rational> coeffs_;
    void trim();
};

// quotient and remainder with deg r < deg b; throws on b = 0
std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);

// exact division; throws if the remainder is nonzero
UniPoly exact_div(const UniPoly& a, const UniPoly& b);

// monic gcd; throws if both inputs are zero
UniPoly gcd(const UniPoly& a, const UniPoly& b);

// a / gcd(a, a'), monic: same roots, all simple; throws on zero input
UniPoly squarefree_part(const UniPoly& a);

// determinant of the Sylvester matrix; zero iff a, b share a root in the
// algebraic closure; throws on zero input
Rational resultant(const UniPoly& a, const UniPoly& b);

std::string to_string(const UniPoly& p, const std::string& var = "x");

}  // namespace sepvars
