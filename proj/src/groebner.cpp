#include "sepvars/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sepvars {

namespace {

int masked_degree(const Exponents& e, unsigned mask) {
    int d = 0;
    for (size_t i = 0; i < e.size(); ++i)
        if (mask & (1u << i)) d += e[i];
    return d;
}

bool degrevlex_less_masked(const Exponents& a, const Exponents& b, unsigned mask) {
    const int da = masked_degree(a, mask), db = masked_degree(b, mask);
    if (da != db) return da < db;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
        if (!(mask & (1u << i))) continue;
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

}  // namespace

bool TermOrder::less(const Exponents& a, const Exponents& b) const {
    switch (kind) {
        case Kind::Degrevlex:
            return degrevlex_less(a, b);
        case Kind::Lex:
            for (size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return a[i] < b[i];
            return false;
        case Kind::Block: {
            const unsigned back = ~front_mask;
            if (degrevlex_less_masked(a, b, front_mask)) return true;
            if (degrevlex_less_masked(b, a, front_mask)) return false;
            return degrevlex_less_masked(a, b, back);
        }
    }
    return false;
}

namespace {

// Sorted-term working representation for the Buchberger engine.
struct Term {
    Exponents e;
    Rational c;
};
using TermList = std::vector<Term>;  // strictly descending in the active order

TermList to_terms(const MPoly& p, const TermOrder& ord) {
    TermList t;
    t.reserve(p.terms().size());
    for (const auto& [e, c] : p.terms()) t.push_back({e, c});
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return ord.less(b.e, a.e); });
    return t;
}

MPoly from_terms(const TermList& t, const std::vector<std::string>& vars) {
    MPoly p(vars);
    for (const auto& term : t) p.add_term(term.e, term.c);
    return p;
}

bool exp_divides(const Exponents& a, const Exponents& b) {  // a | b
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents exp_lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Exponents exp_sub(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

bool exp_equal_sum(const Exponents& l, const Exponents& a, const Exponents& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (l[i] != a[i] + b[i]) return false;
    return true;
}

// r - c * x^shift * g, both sorted descending; linear merge
TermList sub_scaled(const TermList& r, const Rational& c, const Exponents& shift,
                    const TermList& g, const TermOrder& ord) {
    TermList out;
    out.reserve(r.size() + g.size());
    size_t i = 0, j = 0;
    Exponents ge(shift.size());
    while (i < r.size() || j < g.size()) {
        if (j < g.size()) {
            for (size_t k = 0; k < ge.size(); ++k) ge[k] = g[j].e[k] + shift[k];
        }
        if (j == g.size() || (i < r.size() && ord.less(ge, r[i].e))) {
            out.push_back(r[i++]);
        } else if (i == r.size() || ord.less(r[i].e, ge)) {
            out.push_back({ge, -c * g[j].c});
            ++j;
        } else {
            Rational v = r[i].c - c * g[j].c;
            if (!is_zero(v)) out.push_back({r[i].e, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

// scale to integer coefficients with content 1 and positive leading coefficient
void make_primitive(TermList& f) {
    if (f.empty()) return;
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& t : f) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den().get_mpz_t());
    }
    Rational f0 = frac(num_gcd, den_lcm);
    if (sgn(f[0].c) < 0) f0 = -f0;
    for (auto& t : f) t.c /= f0;
}

// full normal form against basis (first divisor in listed order wins)
TermList reduce_full(TermList f, const std::vector<TermList>& basis, const TermOrder& ord) {
    TermList out;
    while (!f.empty()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.empty() || !exp_divides(g[0].e, f[0].e)) continue;
            f = sub_scaled(f, f[0].c / g[0].c, exp_sub(f[0].e, g[0].e), g, ord);
            reduced = true;
            break;
        }
        if (!reduced) {
            out.push_back(f.front());
            f.erase(f.begin());
        }
    }
    return out;
}

struct Pair {
    int i, j;
    Exponents lcm;
};

// Buchberger with the Gebauer-Moller pair update. Deterministic: normal
// selection strategy (smallest lcm in the active order, ties by indices).
std::vector<TermList> buchberger(std::vector<TermList> gens, const TermOrder& ord) {
    std::vector<TermList> g;
    std::vector<Pair> pairs;

    auto add_element = [&](TermList h) {
        const int t = static_cast<int>(g.size());
        const Exponents& lh = h[0].e;

        // drop old pairs strictly dominated by the new element
        std::vector<Pair> kept;
        kept.reserve(pairs.size());
        for (auto& pr : pairs) {
            const Exponents lij = pr.lcm;
            if (exp_divides(lh, lij) && exp_lcm(g[pr.i][0].e, lh) != lij &&
                exp_lcm(g[pr.j][0].e, lh) != lij)
                continue;
            kept.push_back(std::move(pr));
        }
        pairs = std::move(kept);

        // candidate pairs with the new element
        std::vector<Pair> cand;
        for (int i = 0; i < t; ++i) cand.push_back({i, t, exp_lcm(g[i][0].e, lh)});
        std::vector<bool> drop(cand.size(), false);
        for (size_t a = 0; a < cand.size(); ++a) {
            if (drop[a]) continue;
            for (size_t b = 0; b < cand.size(); ++b) {
                if (a == b || drop[b]) continue;
                if (exp_divides(cand[b].lcm, cand[a].lcm) && cand[b].lcm != cand[a].lcm)
                    drop[a] = true;
            }
        }
        // among equal lcms keep the first
        for (size_t a = 0; a < cand.size(); ++a)
            for (size_t b = a + 1; b < cand.size(); ++b)
                if (!drop[a] && !drop[b] && cand[a].lcm == cand[b].lcm) drop[b] = true;
        for (size_t a = 0; a < cand.size(); ++a) {
            if (drop[a]) continue;
            // coprime leading monomials reduce to zero
            if (exp_equal_sum(cand[a].lcm, g[cand[a].i][0].e, lh)) continue;
            pairs.push_back(cand[a]);
        }
        g.push_back(std::move(h));
    };

    for (auto& f : gens) {
        if (f.empty()) continue;
        make_primitive(f);
        add_element(std::move(f));
    }

    while (!pairs.empty()) {
        auto best = pairs.begin();
        for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
            if (ord.less(it->lcm, best->lcm) ||
                (it->lcm == best->lcm &&
                 std::pair(it->i, it->j) < std::pair(best->i, best->j)))
                best = it;
        }
        Pair pr = *best;
        pairs.erase(best);

        const TermList& a = g[pr.i];
        const TermList& b = g[pr.j];
        // S-polynomial: (lcm/lt(a))*a/lc(a) - (lcm/lt(b))*b/lc(b)
        TermList s;
        {
            Exponents sa = exp_sub(pr.lcm, a[0].e);
            TermList left;
            left.reserve(a.size());
            for (const auto& t : a) {
                Exponents e(t.e.size());
                for (size_t k = 0; k < e.size(); ++k) e[k] = t.e[k] + sa[k];
                left.push_back({std::move(e), t.c / a[0].c});
            }
            s = sub_scaled(left, Rational(1) / b[0].c, exp_sub(pr.lcm, b[0].e), b, ord);
        }
        s = reduce_full(std::move(s), g, ord);
        if (!s.empty()) {
            make_primitive(s);
            add_element(std::move(s));
        }
    }

    // inter-reduce to the unique reduced basis
    // 1. drop elements whose leading monomial is divisible by another's
    std::vector<bool> keep(g.size(), true);
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j) {
            if (i == j || !keep[i] || !keep[j]) continue;
            if (exp_divides(g[j][0].e, g[i][0].e) &&
                (g[j][0].e != g[i][0].e || j < i))
                keep[i] = false;
        }
    std::vector<TermList> minimal;
    for (size_t i = 0; i < g.size(); ++i)
        if (keep[i]) minimal.push_back(std::move(g[i]));

    // 2. reduce each tail against the others, make monic
    std::vector<TermList> reduced = minimal;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<TermList> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        TermList r = reduce_full(minimal[i], others, ord);
        const Rational lc = r[0].c;
        for (auto& t : r) t.c /= lc;
        reduced[i] = std::move(r);
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const TermList& x, const TermList& y) { return ord.less(y[0].e, x[0].e); });
    return reduced;
}

}  // namespace

Ideal::Ideal(std::vector<MPoly> gens) {
    for (auto& p : gens) {
        if (p.is_zero()) continue;
        if (vars_.empty()) vars_ = p.vars();
        if (p.vars() != vars_) throw std::invalid_argument("Ideal: mixed variable rings");
        gens_.push_back(std::move(p));
    }
    if (vars_.size() > 4) throw std::invalid_argument("Ideal: at most four variables supported");
}

Ideal::Ideal(const Ideal& o) : vars_(o.vars_), gens_(o.gens_) {
    std::lock_guard<std::mutex> lk(o.mu_);
    cache_ = o.cache_;
}

Ideal& Ideal::operator=(const Ideal& o) {
    if (this == &o) return *this;
    std::scoped_lock lk(mu_, o.mu_);
    vars_ = o.vars_;
    gens_ = o.gens_;
    cache_ = o.cache_;
    return *this;
}

Ideal::Ideal(Ideal&& o) : vars_(std::move(o.vars_)), gens_(std::move(o.gens_)) {
    std::lock_guard<std::mutex> lk(o.mu_);
    cache_ = std::move(o.cache_);
}

Ideal& Ideal::operator=(Ideal&& o) {
    if (this == &o) return *this;
    std::scoped_lock lk(mu_, o.mu_);
    vars_ = std::move(o.vars_);
    gens_ = std::move(o.gens_);
    cache_ = std::move(o.cache_);
    return *this;
}

std::vector<MPoly> Ideal::basis(const TermOrder& ord) const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = cache_.find(ord);
        if (it != cache_.end()) return it->second;
    }
    std::vector<TermList> input;
    for (const auto& p : gens_) input.push_back(to_terms(p, ord));
    std::vector<MPoly> out;
    if (!input.empty())
        for (const auto& t : buchberger(std::move(input), ord)) out.push_back(from_terms(t, vars_));
    std::lock_guard<std::mutex> lk(mu_);
    auto [it, inserted] = cache_.emplace(ord, std::move(out));
    return it->second;
}

MPoly normal_form(const MPoly& f, const Ideal& I, const TermOrder& ord) {
    if (I.is_zero_ideal()) return f;
    if (f.is_zero()) return f;
    if (f.vars() != I.vars()) throw std::invalid_argument("normal_form: ring mismatch");
    std::vector<TermList> basis;
    for (const auto& g : I.basis(ord)) basis.push_back(to_terms(g, ord));
    return from_terms(reduce_full(to_terms(f, ord), basis, ord), f.vars());
}

bool contains(const Ideal& I, const MPoly& f) {
    if (f.is_zero()) return true;
    if (I.is_zero_ideal()) return false;
    return normal_form(f, I).is_zero();
}

bool is_unit_ideal(const Ideal& I) {
    if (I.is_zero_ideal()) return false;
    const auto b = I.basis(TermOrder::degrevlex());
    return b.size() == 1 && b[0].is_constant();
}

bool ideal_equals(const Ideal& I, const Ideal& J) {
    for (const auto& g : I.generators())
        if (!contains(J, g)) return false;
    for (const auto& g : J.generators())
        if (!contains(I, g)) return false;
    return true;
}

UniPoly eliminate(const Ideal& I, int keep_var) {
    if (I.is_zero_ideal()) return UniPoly();
    unsigned front = 0;
    for (int v = 0; v < static_cast<int>(I.vars().size()); ++v)
        if (v != keep_var) front |= 1u << v;
    UniPoly best;
    for (const auto& g : I.basis(TermOrder::block(front))) {
        bool univariate = true;
        for (const auto& [e, c] : g.terms())
            for (int v = 0; v < g.nvars() && univariate; ++v)
                if (v != keep_var && e[v] != 0) univariate = false;
        if (!univariate) continue;
        UniPoly u = to_unipoly(g, keep_var);
        if (best.is_zero() || u.degree() < best.degree()) best = u;
    }
    return best.is_zero() ? best : best.monic();
}

Ideal intersect(const Ideal& I, const Ideal& J) {
    if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal();
    if (I.vars() != J.vars()) throw std::invalid_argument("intersect: ring mismatch");
    std::vector<std::string> ext;
    ext.push_back("@t");
    for (const auto& v : I.vars()) ext.push_back(v);
    const int n = static_cast<int>(ext.size());

    auto lift = [&](const MPoly& p) {
        MPoly r(ext);
        for (const auto& [e, c] : p.terms()) {
            Exponents le(n, 0);
            for (size_t i = 0; i < e.size(); ++i) le[i + 1] = e[i];
            r.add_term(le, c);
        }
        return r;
    };
    const MPoly t = MPoly::variable(ext, 0);
    const MPoly one = MPoly::constant(ext, 1);
    std::vector<MPoly> gens;
    for (const auto& g : I.generators()) gens.push_back(t * lift(g));
    for (const auto& g : J.generators()) gens.push_back((one - t) * lift(g));
    Ideal aux(std::move(gens));

    std::vector<MPoly> out;
    for (const auto& g : aux.basis(TermOrder::block(1u))) {
        bool t_free = true;
        for (const auto& [e, c] : g.terms())
            if (e[0] != 0) { t_free = false; break; }
        if (!t_free) continue;
        MPoly r(I.vars());
        for (const auto& [e, c] : g.terms())
            r.add_term(Exponents(e.begin() + 1, e.end()), c);
        out.push_back(std::move(r));
    }
    return Ideal(std::move(out));
}

bool is_zero_dimensional(const Ideal& I) {
    if (I.is_zero_ideal()) throw std::domain_error("is_zero_dimensional: zero ideal");
    const auto b = I.basis(TermOrder::degrevlex());
    if (b.size() == 1 && b[0].is_constant()) return true;
    const int n = static_cast<int>(I.vars().size());
    for (int v = 0; v < n; ++v) {
        bool found = false;
        for (const auto& g : b) {
            // leading monomial under degrevlex
            const Exponents* lead = nullptr;
            for (const auto& [e, c] : g.terms())
                if (!lead || degrevlex_less(*lead, e)) lead = &e;
            bool pure = (*lead)[v] > 0;
            for (int w = 0; w < n && pure; ++w)
                if (w != v && (*lead)[w] != 0) pure = false;
            if (pure) { found = true; break; }
        }
        if (!found) return false;
    }
    return true;
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    std::vector<MPoly> gens = I.generators();
    for (const auto& g : J.generators()) gens.push_back(g);
    return Ideal(std::move(gens));
}

Ideal ideal_power(const Ideal& I, int s) {
    if (s < 1) throw std::invalid_argument("ideal_power: exponent must be positive");
    const auto& g = I.generators();
    if (g.empty()) return Ideal();
    std::vector<MPoly> out;
    // all degree-s products of generators (combinations with repetition)
    std::vector<int> idx(s, 0);
    while (true) {
        MPoly prod = g[idx[0]];
        for (int k = 1; k < s; ++k) prod = prod * g[idx[k]];
        out.push_back(std::move(prod));
        int k = s - 1;
        while (k >= 0 && idx[k] == static_cast<int>(g.size()) - 1) --k;
        if (k < 0) break;
        ++idx[k];
        for (int j = k + 1; j < s; ++j) idx[j] = idx[k];
    }
    return Ideal(std::move(out));
}

}  // namespace sepvars
