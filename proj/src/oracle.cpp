#include "sepvars/oracle.hpp"

#include <map>
#include <stdexcept>

#include "sepvars/linalg.hpp"

namespace sepvars {

std::optional<SeparableWitness> oracle_separable(const MPoly& p, int max_deg) {
    if (p.is_zero()) throw std::invalid_argument("oracle_separable: zero input");
    if (p.nvars() != 2) throw std::invalid_argument("oracle_separable: bivariate only");
    if (p.is_constant()) return SeparableWitness{MPoly::constant(p.vars(), 1), p};

    for (int dx = 0; dx <= max_deg; ++dx) {
        // unknown coefficients of q: monomials x^a y^b, a <= dx, a + b <= max_deg
        std::vector<Exponents> q_mons;
        for (int a = 0; a <= dx; ++a)
            for (int b = 0; a + b <= max_deg; ++b) q_mons.push_back({a, b});

        std::map<Exponents, int> row_of;
        for (const auto& [e, c] : p.terms())
            for (const auto& qm : q_mons) {
                Exponents prod{e[0] + qm[0], e[1] + qm[1]};
                if (prod[0] >= 1 && prod[1] >= 1) row_of.emplace(prod, 0);
            }
        int r = 0;
        for (auto& [e, idx] : row_of) idx = r++;

        QMatrix mat(r, static_cast<int>(q_mons.size()));
        for (const auto& [e, c] : p.terms())
            for (size_t k = 0; k < q_mons.size(); ++k) {
                Exponents prod{e[0] + q_mons[k][0], e[1] + q_mons[k][1]};
                if (prod[0] >= 1 && prod[1] >= 1)
                    mat.at(row_of[prod], static_cast<int>(k)) += c;
            }

        const auto kernel = nullspace(mat);
        if (kernel.empty()) continue;
        MPoly q(p.vars());
        for (size_t k = 0; k < q_mons.size(); ++k) q.add_term(q_mons[k], kernel.front()[k]);
        q = q.primitive_normalized();
        return SeparableWitness{q, q * p};
    }
    return std::nullopt;
}

std::vector<PairFG> oracle_algebra_slice(const Ideal& I, int d) {
    if (d < 0) throw std::invalid_argument("oracle_algebra_slice: negative degree");
    const int cols = 2 * (d + 1);

    std::vector<MPoly> nf;  // normal forms of 1..x^d then -(1..y^d)
    if (I.is_zero_ideal()) {
        std::vector<std::string> vars{"x", "y"};
        for (int i = 0; i <= d; ++i)
            nf.push_back(MPoly::monomial(vars, {i, 0}, 1));
        for (int j = 0; j <= d; ++j)
            nf.push_back(MPoly::monomial(vars, {0, j}, -1));
    } else {
        const MPoly x = MPoly::variable(I.vars(), 0);
        const MPoly y = MPoly::variable(I.vars(), 1);
        MPoly cur = normal_form(MPoly::constant(I.vars(), 1), I);
        for (int i = 0; i <= d; ++i) {
            nf.push_back(cur);
            if (i < d) cur = normal_form(cur * x, I);
        }
        cur = normal_form(MPoly::constant(I.vars(), 1), I);
        for (int j = 0; j <= d; ++j) {
            nf.push_back(-cur);
            if (j < d) cur = normal_form(cur * y, I);
        }
    }

    std::map<Exponents, int> row_of;
    for (const auto& m : nf)
        for (const auto& [e, c] : m.terms()) row_of.emplace(e, 0);
    int r = 0;
    for (auto& [e, idx] : row_of) idx = r++;

    QMatrix mat(r, cols);
    for (int k = 0; k < cols; ++k)
        for (const auto& [e, c] : nf[k].terms()) mat.at(row_of[e], k) = c;

    std::vector<PairFG> out;
    for (const auto& v : nullspace(mat)) {
        out.push_back({UniPoly(std::vector<Rational>(v.begin(), v.begin() + d + 1)),
                       UniPoly(std::vector<Rational>(v.begin() + d + 1, v.end()))});
    }
    return out;
}

}  // namespace sepvars
