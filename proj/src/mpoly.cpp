#include "sepvars/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sepvars {

MPoly MPoly::constant(std::vector<std::string> vars, const Rational& c) {
    MPoly p(std::move(vars));
    p.add_term(Exponents(p.nvars(), 0), c);
    return p;
}

MPoly MPoly::variable(std::vector<std::string> vars, int index) {
    MPoly p(std::move(vars));
    Exponents e(p.nvars(), 0);
    e.at(index) = 1;
    p.add_term(e, 1);
    return p;
}

MPoly MPoly::monomial(std::vector<std::string> vars, Exponents e, const Rational& c) {
    MPoly p(std::move(vars));
    if (static_cast<int>(e.size()) != p.nvars())
        throw std::invalid_argument("monomial: exponent arity mismatch");
    p.add_term(e, c);
    return p;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 &&
           std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                       [](int e) { return e == 0; });
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

int MPoly::degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
    return d;
}

Rational MPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MPoly::constant_coeff() const { return coeff(Exponents(nvars(), 0)); }

void MPoly::add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars())
        throw std::invalid_argument("add_term: exponent arity mismatch");
    if (sepvars::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sepvars::is_zero(it->second)) terms_.erase(it);
    }
}

void MPoly::check_compatible(const MPoly& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("MPoly: mixed variable rings");
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    check_compatible(o);
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    check_compatible(o);
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    check_compatible(o);
    MPoly r(vars_);
    Exponents e(nvars());
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            for (int i = 0; i < nvars(); ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

MPoly MPoly::operator*(const Rational& c) const {
    if (sepvars::is_zero(c)) return MPoly(vars_);
    MPoly r = *this;
    for (auto& [e, v] : r.terms_) v *= c;
    return r;
}

MPoly MPoly::pow(unsigned long e) const {
    MPoly r = MPoly::constant(vars_, 1);
    MPoly b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool degrevlex_less(const Exponents& a, const Exponents& b) {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

namespace {

const Exponents* degrevlex_leading(const MPoly& p) {
    const Exponents* best = nullptr;
    for (const auto& [e, c] : p.terms())
        if (!best || degrevlex_less(*best, e)) best = &e;
    return best;
}

}  // namespace

Rational MPoly::content() const {
    if (terms_.empty()) return Rational(0);
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational cont = frac(num_gcd, den_lcm);
    if (sgn(coeff(*degrevlex_leading(*this))) < 0) cont = -cont;
    return cont;
}

MPoly MPoly::primitive_normalized() const {
    if (terms_.empty()) return *this;
    return *this * (Rational(1) / content());
}

bool MPoly::depends_on(int var) const { return degree_in(var) > 0; }

Weight::Weight(long wx_, long wy_) : wx(wx_), wy(wy_) {
    if (wx <= 0 || wy <= 0) throw std::invalid_argument("Weight: weights must be positive");
    const long g = std::gcd(wx, wy);
    wx /= g;
    wy /= g;
}

long weight_of(const MPoly& p, const Weight& w) {
    if (p.is_zero()) throw std::domain_error("weight_of zero polynomial");
    if (p.nvars() != 2) throw std::invalid_argument("weight_of: bivariate only");
    long best = 0;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const long wt = w.wx * e[0] + w.wy * e[1];
        if (first || wt > best) best = wt;
        first = false;
    }
    return best;
}

MPoly leading_part(const MPoly& p, const Weight& w) {
    const long top = weight_of(p, w);
    MPoly r(p.vars());
    for (const auto& [e, c] : p.terms())
        if (w.wx * e[0] + w.wy * e[1] == top) r.add_term(e, c);
    return r;
}

namespace {

// bivariate as a dense vector in y with UniPoly-in-x coefficients
std::vector<UniPoly> by_y_power(const MPoly& p) {
    std::vector<UniPoly> out(static_cast<size_t>(std::max(0, p.degree_in(1)) + 1));
    std::vector<std::vector<Rational>> coef(out.size());
    for (const auto& [e, c] : p.terms()) {
        auto& row = coef[e[1]];
        if (static_cast<int>(row.size()) <= e[0]) row.resize(e[0] + 1, Rational(0));
        row[e[0]] = c;
    }
    for (size_t j = 0; j < out.size(); ++j) out[j] = UniPoly(coef[j]);
    return out;
}

MPoly from_y_powers(const std::vector<UniPoly>& v, const std::vector<std::string>& vars) {
    MPoly r(vars);
    for (size_t j = 0; j < v.size(); ++j)
        for (int i = 0; i <= v[j].degree(); ++i)
            r.add_term({i, static_cast<int>(j)}, v[j].coeff(i));
    return r;
}

int deg_y(const std::vector<UniPoly>& v) {
    for (int j = static_cast<int>(v.size()) - 1; j >= 0; --j)
        if (!v[j].is_zero()) return j;
    return -1;
}

// content in Q[x] of a polynomial in (Q[x])[y]
UniPoly content_x(const std::vector<UniPoly>& v) {
    UniPoly c;
    for (const auto& u : v) {
        if (u.is_zero()) continue;
        c = c.is_zero() ? u.monic() : gcd(c, u);
        if (c.degree() == 0) return UniPoly(Rational(1));
    }
    return c;
}

std::vector<UniPoly> div_content_x(std::vector<UniPoly> v, const UniPoly& c) {
    for (auto& u : v)
        if (!u.is_zero()) u = exact_div(u, c);
    return v;
}

// pseudo-remainder of a by b in (Q[x])[y]; deg_y a >= deg_y b >= 0
std::vector<UniPoly> prem_y(std::vector<UniPoly> a, const std::vector<UniPoly>& b) {
    const int db = deg_y(b);
    const UniPoly& lb = b[db];
    int da = deg_y(a);
    while (da >= db && da >= 0) {
        UniPoly la = a[da];
        for (int j = 0; j <= da; ++j) a[j] = a[j] * lb;
        for (int j = 0; j <= db; ++j) a[da - db + j] = a[da - db + j] - b[j] * la;
        a.resize(da);  // top coefficient cancelled
        da = deg_y(a);
    }
    return a;
}

}  // namespace

MPoly gcd_bivariate(const MPoly& a, const MPoly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd_bivariate of two zeros");
    if (a.nvars() != 2 || b.nvars() != 2)
        throw std::invalid_argument("gcd_bivariate: bivariate only");
    if (a.is_zero()) return b.primitive_normalized();
    if (b.is_zero()) return a.primitive_normalized();

    auto va = by_y_power(a);
    auto vb = by_y_power(b);
    const UniPoly ca = content_x(va);
    const UniPoly cb = content_x(vb);
    const UniPoly cg = gcd(ca, cb);
    auto pa = div_content_x(std::move(va), ca);
    auto pb = div_content_x(std::move(vb), cb);

    if (deg_y(pa) < deg_y(pb)) std::swap(pa, pb);
    // primitive remainder sequence in (Q[x])[y]
    while (deg_y(pb) > 0) {
        auto r = prem_y(pa, pb);
        if (deg_y(r) < 0) {
            auto g = div_content_x(std::move(pb), content_x(pb));
            MPoly out = from_y_powers(g, a.vars());
            MPoly cgm = from_unipoly(cg, a.vars(), 0);
            return (out * cgm).primitive_normalized();
        }
        pa = std::move(pb);
        pb = div_content_x(std::move(r), content_x(r));
    }
    // remainder sequence ended in a y-constant: primitive parts are coprime
    MPoly out = from_unipoly(cg, a.vars(), 0);
    return out.primitive_normalized();
}

MPoly rem_x(const MPoly& dividend, const MPoly& divisor, int var_x) {
    const int dx = divisor.degree_in(var_x);
    if (dx < 0) throw std::invalid_argument("rem_x: zero divisor");
    Rational lead(0);
    for (const auto& [e, c] : divisor.terms()) {
        if (e[var_x] != dx) continue;
        for (int v = 0; v < divisor.nvars(); ++v)
            if (v != var_x && e[v] != 0)
                throw std::invalid_argument("rem_x: leading x-coefficient is not constant");
        lead = c;
    }
    if (dx == 0) return MPoly(dividend.vars());  // division by a unit
    MPoly r = dividend;
    while (r.degree_in(var_x) >= dx) {
        const int d = r.degree_in(var_x);
        // subtract (lead coeff bundle / lead) * x^(d-dx) * divisor
        MPoly bundle(r.vars());
        for (const auto& [e, c] : r.terms())
            if (e[var_x] == d) {
                Exponents shifted = e;
                shifted[var_x] = d - dx;
                bundle.add_term(shifted, c / lead);
            }
        r = r - bundle * divisor;
    }
    return r;
}

MPoly exact_div(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw std::domain_error("exact_div by zero");
    MPoly q(a.vars());
    MPoly r = a;
    const Exponents* lb = degrevlex_leading(b);
    const Rational cb = b.coeff(*lb);
    while (!r.is_zero()) {
        const Exponents* lr = degrevlex_leading(r);
        Exponents shift(r.nvars());
        for (int i = 0; i < r.nvars(); ++i) {
            shift[i] = (*lr)[i] - (*lb)[i];
            if (shift[i] < 0) throw std::domain_error("exact_div: inexact division");
        }
        const Rational c = r.coeff(*lr) / cb;
        MPoly t = MPoly::monomial(r.vars(), shift, c);
        q = q + t;
        r = r - t * b;
    }
    return q;
}

bool divides(const MPoly& b, const MPoly& a) {
    if (a.is_zero()) return true;
    if (b.is_zero()) return false;
    try {
        exact_div(a, b);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

MPoly substitute(const MPoly& p, const std::vector<MPoly>& images) {
    if (static_cast<int>(images.size()) != p.nvars())
        throw std::invalid_argument("substitute: one image per variable required");
    if (p.nvars() == 0) throw std::invalid_argument("substitute: ringless polynomial");
    const auto& tvars = images[0].vars();
    // per-variable power tables
    std::vector<std::vector<MPoly>> powers(images.size());
    for (size_t v = 0; v < images.size(); ++v) powers[v].push_back(MPoly::constant(tvars, 1));
    MPoly out(tvars);
    for (const auto& [e, c] : p.terms()) {
        MPoly term = MPoly::constant(tvars, c);
        for (size_t v = 0; v < images.size(); ++v) {
            while (static_cast<int>(powers[v].size()) <= e[v])
                powers[v].push_back(powers[v].back() * images[v]);
            if (e[v] > 0) term = term * powers[v][e[v]];
        }
        out = out + term;
    }
    return out;
}

bool is_separated(const MPoly& p) {
    for (const auto& [e, c] : p.terms()) {
        int positive = 0;
        for (int x : e)
            if (x > 0) ++positive;
        if (positive > 1) return false;
    }
    return true;
}

int max_pure_exponent(const MPoly& p, int var) {
    int best = 0;
    for (const auto& [e, c] : p.terms()) {
        bool pure = e[var] >= 1;
        for (int v = 0; pure && v < p.nvars(); ++v)
            if (v != var && e[v] != 0) pure = false;
        if (pure) best = std::max(best, e[var]);
    }
    return best;
}

MPoly from_unipoly(const UniPoly& u, std::vector<std::string> vars, int var) {
    MPoly r(std::move(vars));
    Exponents e(r.nvars(), 0);
    for (int i = 0; i <= u.degree(); ++i) {
        e[var] = i;
        r.add_term(e, u.coeff(i));
    }
    return r;
}

UniPoly to_unipoly(const MPoly& p, int var) {
    std::vector<Rational> coeffs;
    for (const auto& [e, c] : p.terms()) {
        for (int v = 0; v < p.nvars(); ++v)
            if (v != var && e[v] != 0)
                throw std::invalid_argument("to_unipoly: polynomial is not univariate in " +
                                            p.vars()[var]);
        if (static_cast<int>(coeffs.size()) <= e[var]) coeffs.resize(e[var] + 1, Rational(0));
        coeffs[e[var]] = c;
    }
    return UniPoly(coeffs);
}

std::string to_string(const MPoly& p) {
    if (p.is_zero()) return "0";
    std::vector<const Exponents*> order;
    for (const auto& [e, c] : p.terms()) order.push_back(&e);
    std::sort(order.begin(), order.end(),
              [](const Exponents* a, const Exponents* b) { return degrevlex_less(*b, *a); });
    std::string out;
    bool first = true;
    for (const Exponents* e : order) {
        Rational c = p.coeff(*e);
        const bool neg = sgn(c) < 0;
        Rational ac = abs(c);
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono;
        for (int v = 0; v < p.nvars(); ++v) {
            if ((*e)[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += p.vars()[v];
            if ((*e)[v] > 1) mono += "^" + std::to_string((*e)[v]);
        }
        if (mono.empty()) {
            out += to_string(ac);
        } else {
            if (!(ac == 1)) out += to_string(ac) + "*";
            out += mono;
        }
    }
    return out;
}

}  // namespace sepvars
