#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sepvars/rational.hpp"
#include "sepvars/unipoly.hpp"

namespace sepvars {

using Exponents = std::vector<int>;

// Sparse multivariate polynomial over Q. Every value carries its ordered
// variable list; binary operations require identical lists. No zero
// coefficients are stored.
class MPoly {
public:
    MPoly() = default;
    explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MPoly constant(std::vector<std::string> vars, const Rational& c);
    static MPoly variable(std::vector<std::string> vars, int index);
    static MPoly monomial(std::vector<std::string> vars, Exponents e, const Rational& c);

    const std::vector<std::string>& vars() const { return vars_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int total_degree() const;  // -1 for zero
    int degree_in(int var) const;
    Rational coeff(const Exponents& e) const;
    Rational constant_coeff() const;

    void add_term(const Exponents& e, const Rational& c);  // accumulate, drop zeros

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const Rational& c) const;
    MPoly pow(unsigned long e) const;
    bool operator==(const MPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

    // integer-primitive form with positive leading (degrevlex) coefficient
    MPoly primitive_normalized() const;
    Rational content() const;

    bool depends_on(int var) const;

private:
    std::vector<std::string> vars_;
    std::map<Exponents, Rational> terms_;
    void check_compatible(const MPoly& o) const;
};

// Weight function on bivariate monomials: weight(x^i y^j) = wx*i + wy*j.
// Both weights positive, stored with gcd(wx, wy) = 1.
struct Weight {
    long wx = 1, wy = 1;
    Weight() = default;
    Weight(long wx_, long wy_);
    bool operator==(const Weight&) const = default;
};

// max over terms of wx*i + wy*j; throws on zero polynomial
long weight_of(const MPoly& p, const Weight& w);

// sum of the terms of maximal weight; throws on zero polynomial
MPoly leading_part(const MPoly& p, const Weight& w);

// primitive gcd in Q[x,y] (positive degrevlex-leading coefficient), computed
// by content/primitive splitting over Q[x][y] and a primitive remainder
// sequence; throws if both inputs are zero
MPoly gcd_bivariate(const MPoly& a, const MPoly& b);

// remainder of univariate division by x; requires the divisor's leading
// coefficient with respect to x (index var_x) to be a nonzero constant
MPoly rem_x(const MPoly& dividend, const MPoly& divisor, int var_x = 0);

// exact multivariate division by a single divisor (degrevlex leading terms);
// throws if the division leaves a remainder
MPoly exact_div(const MPoly& a, const MPoly& b);
bool divides(const MPoly& b, const MPoly& a);  // b | a

// substitute each variable by the given image (all images share a ring)
MPoly substitute(const MPoly& p, const std::vector<MPoly>& images);

// true iff no term is divisible by the product of two distinct variables
bool is_separated(const MPoly& p);

// largest e >= 1 with a pure term var^e present; 0 if none
int max_pure_exponent(const MPoly& p, int var);

// conversions; from_unipoly places u on variable `var` of the ring
MPoly from_unipoly(const UniPoly& u, std::vector<std::string> vars, int var);
// requires all exponents outside `var` to vanish
UniPoly to_unipoly(const MPoly& p, int var);

// canonical text form: degrevlex-descending terms, explicit '*' and '^'
std::string to_string(const MPoly& p);

// degrevlex comparison helpers shared with the Groebner engine
bool degrevlex_less(const Exponents& a, const Exponents& b);

}  // namespace sepvars
