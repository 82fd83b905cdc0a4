#include "sepvars/unipoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "sepvars/linalg.hpp"

namespace sepvars {

UniPoly::UniPoly(const Rational& c) {
    if (!sepvars::is_zero(c)) coeffs_.push_back(c);
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(int exp, const Rational& c) {
    UniPoly p;
    if (exp < 0) throw std::invalid_argument("monomial: negative exponent");
    if (!sepvars::is_zero(c)) {
        p.coeffs_.assign(exp + 1, Rational(0));
        p.coeffs_[exp] = c;
    }
    return p;
}

void UniPoly::trim() {
    while (!coeffs_.empty() && sepvars::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Rational UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[i];
}

const Rational& UniPoly::leading_coeff() const {
    if (coeffs_.empty()) throw std::domain_error("leading_coeff of zero polynomial");
    return coeffs_.back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    UniPoly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    r.trim();
    return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    UniPoly r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (sepvars::is_zero(coeffs_[i])) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    r.trim();
    return r;
}

UniPoly UniPoly::operator*(const Rational& c) const {
    if (sepvars::is_zero(c)) return UniPoly();
    UniPoly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

UniPoly UniPoly::shifted(int k) const {
    if (is_zero()) return UniPoly();
    UniPoly r;
    r.coeffs_.assign(coeffs_.size() + k, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i + k] = coeffs_[i];
    return r;
}

UniPoly UniPoly::pow(unsigned long e) const {
    UniPoly r(Rational(1));
    UniPoly b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

UniPoly UniPoly::derivative() const {
    UniPoly r;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        r.coeffs_.push_back(coeffs_[i] * Rational(static_cast<long>(i)));
    r.trim();
    return r;
}

Rational UniPoly::eval(const Rational& x) const {
    Rational r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
    UniPoly r;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        r = r * inner + UniPoly(*it);
    return r;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) throw std::domain_error("monic of zero polynomial");
    return *this * (Rational(1) / coeffs_.back());
}

Rational UniPoly::content() const {
    if (is_zero()) return Rational(0);
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& c : coeffs_) {
        if (sepvars::is_zero(c)) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational content = frac(num_gcd, den_lcm);
    if (sgn(coeffs_.back()) < 0) content = -content;
    return content;
}

UniPoly UniPoly::primitive_part() const {
    if (is_zero()) return UniPoly();
    return *this * (Rational(1) / content());
}

std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    UniPoly q, r = a;
    const int db = b.degree();
    const Rational& lb = b.leading_coeff();
    while (!r.is_zero() && r.degree() >= db) {
        Rational c = r.coeff(r.degree()) / lb;
        int k = r.degree() - db;
        q = q + UniPoly::monomial(k, c);
        r = r - b.shifted(k) * c;
    }
    return {q, r};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::domain_error("exact_div: inexact division");
    return q;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    UniPoly u = a, v = b;
    while (!v.is_zero()) {
        UniPoly r = divrem(u, v).second;
        // keep coefficients small between steps
        if (!r.is_zero()) r = r.primitive_part();
        u = v;
        v = r;
    }
    return u.monic();
}

UniPoly squarefree_part(const UniPoly& a) {
    if (a.is_zero()) throw std::domain_error("squarefree_part of zero polynomial");
    if (a.degree() == 0) return UniPoly(Rational(1));
    return exact_div(a, gcd(a, a.derivative())).monic();
}

Rational resultant(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) throw std::domain_error("resultant of zero polynomial");
    const int m = a.degree(), n = b.degree();
    if (m == 0) return rat_pow(a.coeff(0), n);
    if (n == 0) return rat_pow(b.coeff(0), m);
    // Sylvester matrix, fraction-free elimination
    std::vector<std::vector<Rational>> s(m + n, std::vector<Rational>(m + n, Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[i][i + j] = a.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[n + i][i + j] = b.coeff(n - j);
    return bareiss_determinant<Rational>(
        s, Rational(1), [](const Rational& x, const Rational& y) { return x / y; },
        [](const Rational& x) { return sepvars::is_zero(x); });
}

std::string to_string(const UniPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p.coeff(i);
        if (sepvars::is_zero(c)) continue;
        bool neg = sgn(c) < 0;
        Rational ac = abs(c);
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        bool unit = (ac == 1);
        if (i == 0) {
            out += to_string(ac);
        } else {
            if (!unit) out += to_string(ac) + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace sepvars
