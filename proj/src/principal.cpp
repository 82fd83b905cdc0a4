#include "sepvars/principal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "sepvars/cyclo.hpp"
#include "sepvars/linalg.hpp"

namespace sepvars {

namespace {

PrincipalResult trivial_result(NonSepReason reason, std::optional<long> n = {},
                               std::optional<Weight> w = {}) {
    PrincipalResult r;
    r.generator = pair_one();
    r.trivial = true;
    r.reason = reason;
    r.n_bound = n;
    r.weight = w;
    return r;
}

}  // namespace

PrincipalResult minimal_separated_multiple(const MPoly& p) {
    if (p.is_zero() || p.nvars() != 2)
        throw std::invalid_argument("minimal_separated_multiple: nonzero bivariate input required");
    if (!p.depends_on(0) || !p.depends_on(1))
        throw std::invalid_argument("minimal_separated_multiple: input must involve both variables");

    // a separable non-univariate p must contain pure positive powers of both
    // variables (its weighted leading part divides a binomial a*x^m - b*y^n)
    const int wy_raw = max_pure_exponent(p, 0);
    const int wx_raw = max_pure_exponent(p, 1);
    if (wy_raw == 0 || wx_raw == 0) return trivial_result(NonSepReason::missing_pure_power);
    const Weight w(wx_raw, wy_raw);

    const MPoly h = leading_part(p, w);
    Exponents pure_x(2, 0);
    pure_x[0] = wy_raw;
    if (is_zero(h.coeff(pure_x)))
        return trivial_result(NonSepReason::leading_part_not_binomial_capable, {}, w);

    // dehomogenize: h(x, 1)
    UniPoly h_hat;
    {
        std::vector<Rational> coeffs(wy_raw + 1, Rational(0));
        for (const auto& [e, c] : h.terms()) coeffs[e[0]] += c;
        h_hat = UniPoly(coeffs);
    }
    if (!gcd(h_hat, h_hat.derivative()).is_constant())
        return trivial_result(NonSepReason::repeated_roots, {}, w);

    long n_order = 1;
    if (h_hat.degree() >= 1) {
        const UniPoly ratio = ratio_polynomial(h_hat);
        const long bound = static_cast<long>(h_hat.degree()) * h_hat.degree();
        const CyclotomicReport rep = cyclotomic_report(ratio, bound);
        if (!rep.all_roots_of_unity)
            return trivial_result(NonSepReason::ratio_not_root_of_unity, {}, w);
        n_order = rep.order_lcm;
    }

    if ((n_order * w.wx) % w.wy != 0)
        throw std::logic_error("minimal_separated_multiple: weight does not divide N*wx");
    const long deg_f = n_order;
    const long deg_g = n_order * w.wx / w.wy;

    // ansatz sum a_i x^i - sum b_j y^j reduced modulo p per monomial; the
    // leading x-coefficient of p is a constant, so division by x is valid
    std::vector<MPoly> rx;
    rx.reserve(deg_f + 1);
    {
        const MPoly x = MPoly::variable(p.vars(), 0);
        MPoly cur = MPoly::constant(p.vars(), 1);
        for (long i = 0; i <= deg_f; ++i) {
            rx.push_back(cur);
            if (i < deg_f) cur = rem_x(cur * x, p);
        }
    }
    std::map<Exponents, int> row_of;
    for (const auto& m : rx)
        for (const auto& [e, c] : m.terms()) row_of.emplace(e, 0);
    for (long j = 0; j <= deg_g; ++j) row_of.emplace(Exponents{0, static_cast<int>(j)}, 0);
    int r = 0;
    for (auto& [e, idx] : row_of) idx = r++;

    const int cols_a = static_cast<int>(deg_f) + 1;
    const int cols = cols_a + static_cast<int>(deg_g) + 1;
    QMatrix mat(r, cols);
    for (long i = 0; i <= deg_f; ++i)
        for (const auto& [e, c] : rx[i].terms()) mat.at(row_of[e], static_cast<int>(i)) = c;
    for (long j = 0; j <= deg_g; ++j)
        mat.at(row_of[Exponents{0, static_cast<int>(j)}], cols_a + static_cast<int>(j)) -= 1;

    const auto kernel = nullspace(mat);

    // echelonize with leading coordinate scanned from the highest f-degree
    // down; the vector with the smallest positive f-degree leader is the
    // minimal separated multiple
    auto lead_pos = [&](const std::vector<Rational>& v) {
        for (int i = cols_a - 1; i >= 0; --i)
            if (!is_zero(v[i])) return i;
        return -1;
    };
    std::vector<std::vector<Rational>> echelon;
    for (auto row : kernel) {
        while (true) {
            const int l = lead_pos(row);
            if (l < 0) break;
            auto hit = std::find_if(echelon.begin(), echelon.end(),
                                    [&](const auto& b) { return lead_pos(b) == l; });
            if (hit == echelon.end()) break;
            const Rational c = row[l] / (*hit)[l];
            for (size_t k = 0; k < row.size(); ++k) row[k] -= c * (*hit)[k];
        }
        if (lead_pos(row) >= 0) echelon.push_back(std::move(row));
    }

    const std::vector<Rational>* best = nullptr;
    for (const auto& row : echelon) {
        if (lead_pos(row) < 1) continue;  // the constant solution leads at a_0
        if (!best || lead_pos(row) < lead_pos(*best)) best = &row;
    }
    if (!best) return trivial_result(NonSepReason::no_nonconstant_solution, n_order, w);

    std::vector<Rational> sol = *best;
    const Rational lc = sol[lead_pos(sol)];
    for (auto& c : sol) c /= lc;
    // gauge: subtract the constant pair so that f(0) = 0
    const Rational c0 = sol[0];
    sol[0] -= c0;
    sol[cols_a] -= c0;

    PrincipalResult res;
    res.generator = {UniPoly(std::vector<Rational>(sol.begin(), sol.begin() + cols_a)),
                     UniPoly(std::vector<Rational>(sol.begin() + cols_a, sol.end()))};
    res.trivial = false;
    res.reason = NonSepReason::none;
    res.n_bound = n_order;
    res.weight = w;
    return res;
}

}  // namespace sepvars
