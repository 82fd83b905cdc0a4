#include "sepvars/zerodim.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "sepvars/linalg.hpp"

namespace sepvars {

namespace {

// normal forms of 1, v, v^2, ..., v^(count-1) modulo I, computed incrementally
std::vector<MPoly> power_normal_forms(const Ideal& I, int var, int count) {
    std::vector<MPoly> out;
    out.reserve(count);
    const MPoly v = MPoly::variable(I.vars(), var);
    MPoly cur = MPoly::constant(I.vars(), 1);
    cur = normal_form(cur, I);
    for (int i = 0; i < count; ++i) {
        out.push_back(cur);
        if (i + 1 < count) cur = normal_form(cur * v, I);
    }
    return out;
}

}  // namespace

ZeroDimResult zero_dim_algebra(const Ideal& I) {
    if (!is_zero_dimensional(I))
        throw std::invalid_argument("zero_dim_algebra: ideal is not zero-dimensional");

    ZeroDimResult res;
    res.data.ideal = I;

    if (is_unit_ideal(I)) {
        res.data.p = UniPoly(Rational(1));
        res.data.q = UniPoly(Rational(1));
        res.data.unit_ideal = true;
        const UniPoly one(Rational(1)), zero, var = UniPoly::variable();
        res.generators = {{one, zero}, {var, zero}, {zero, one}, {zero, var}};
        return res;
    }

    const UniPoly p = eliminate(I, 0);
    const UniPoly q = eliminate(I, 1);
    if (p.is_zero() || q.is_zero())
        throw std::logic_error("zero_dim_algebra: missing eliminant for zero-dimensional ideal");
    res.data.p = p;
    res.data.q = q;
    const int dp = p.degree(), dq = q.degree();

    // ansatz sum a_i x^i - sum b_j y^j: one normal form per monomial
    const auto nfx = power_normal_forms(I, 0, dp);
    const auto nfy = power_normal_forms(I, 1, dq);

    std::map<Exponents, int> row_of;
    auto note_rows = [&](const MPoly& m) {
        for (const auto& [e, c] : m.terms()) row_of.emplace(e, 0);
    };
    for (const auto& m : nfx) note_rows(m);
    for (const auto& m : nfy) note_rows(m);
    int r = 0;
    for (auto& [e, idx] : row_of) idx = r++;

    QMatrix mat(r, dp + dq);
    for (int i = 0; i < dp; ++i)
        for (const auto& [e, c] : nfx[i].terms()) mat.at(row_of[e], i) = c;
    for (int j = 0; j < dq; ++j)
        for (const auto& [e, c] : nfy[j].terms()) mat.at(row_of[e], dp + j) = -c;

    const auto kernel = nullspace(mat);

    // row-reduce the f-parts so the f_i have pairwise distinct degrees
    std::vector<std::vector<Rational>> rows = kernel;
    auto lead_exp = [&](const std::vector<Rational>& v) {
        for (int i = dp - 1; i >= 0; --i)
            if (!is_zero(v[i])) return i;
        return -1;
    };
    std::vector<std::vector<Rational>> echelon;
    for (auto row : rows) {
        while (true) {
            const int l = lead_exp(row);
            if (l < 0) break;
            auto hit = std::find_if(echelon.begin(), echelon.end(),
                                    [&](const auto& b) { return lead_exp(b) == l; });
            if (hit == echelon.end()) break;
            const Rational c = row[l] / (*hit)[l];
            for (size_t k = 0; k < row.size(); ++k) row[k] -= c * (*hit)[k];
        }
        if (lead_exp(row) < 0) {
            // a kernel element with zero f-part has zero g-part as well
            if (std::any_of(row.begin(), row.end(), [](const Rational& c) { return !is_zero(c); }))
                throw std::logic_error("zero_dim_algebra: pair with zero f and nonzero g");
            continue;
        }
        const Rational lc = row[lead_exp(row)];
        for (auto& c : row) c /= lc;
        echelon.push_back(std::move(row));
    }
    std::sort(echelon.begin(), echelon.end(),
              [&](const auto& a, const auto& b) { return lead_exp(a) < lead_exp(b); });

    std::vector<bool> is_f_degree(dp, false);
    for (const auto& row : echelon) {
        std::vector<Rational> fc(row.begin(), row.begin() + dp);
        std::vector<Rational> gc(row.begin() + dp, row.end());
        is_f_degree[lead_exp(row)] = true;
        res.data.basis_pairs.push_back({UniPoly(fc), UniPoly(gc)});
    }
    for (int k = 0; k < dp; ++k)
        if (!is_f_degree[k]) res.data.v_exponents_x.push_back(k);
    for (int k = 0; k < dq; ++k) res.data.v_exponents_y.push_back(k);

    res.generators = res.data.basis_pairs;
    for (int i = 0; i < dp; ++i) res.generators.push_back({p.shifted(i), UniPoly()});
    for (int j = 0; j < dq; ++j) res.generators.push_back({UniPoly(), q.shifted(j)});
    return res;
}

PairFG reduce_to_v(const PairFG& pair, const ZeroDimAlgebra& data) {
    if (data.unit_ideal) return {UniPoly(), UniPoly()};
    UniPoly f = divrem(pair.f, data.p).second;
    UniPoly g = divrem(pair.g, data.q).second;
    // cancel first-component terms at basis degrees, highest degree first
    for (auto it = data.basis_pairs.rbegin(); it != data.basis_pairs.rend(); ++it) {
        const int d = it->f.degree();
        const Rational c = f.coeff(d);
        if (is_zero(c)) continue;
        f = f - it->f * c;
        g = g - it->g * c;
    }
    return {f, g};
}

}  // namespace sepvars
