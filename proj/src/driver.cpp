#include "sepvars/driver.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "sepvars/decomp.hpp"
#include "sepvars/linalg.hpp"
#include "sepvars/numsg.hpp"

namespace sepvars {

namespace {

UniPoly primitive_positive(const UniPoly& u) {
    if (u.is_zero()) return u;
    return u.primitive_part();
}

void assert_member(const PairFG& pair, const Ideal& I) {
    const MPoly diff = from_unipoly(pair.f, I.vars(), 0) - from_unipoly(pair.g, I.vars(), 1);
    if (!contains(I, diff))
        throw std::logic_error("separate: produced a pair outside the ideal");
}

}  // namespace

std::vector<UniPoly> restricted_search(const PairFG& a, const ZeroDimAlgebra& data,
                                       const std::vector<long>& S) {
    for (long s : S)
        if (s <= 0) throw std::invalid_argument("restricted_search: exponents must be positive");
    if (S.empty()) return {};

    // V-coordinates: f-part on v_exponents_x, then g-part on v_exponents_y
    const int vx = static_cast<int>(data.v_exponents_x.size());
    const int vy = static_cast<int>(data.v_exponents_y.size());
    QMatrix mat(vx + vy, static_cast<int>(S.size()));
    for (size_t k = 0; k < S.size(); ++k) {
        const PairFG r = reduce_to_v(a.pow(static_cast<unsigned long>(S[k])), data);
        for (int i = 0; i < vx; ++i)
            mat.at(i, static_cast<int>(k)) = r.f.coeff(data.v_exponents_x[i]);
        for (int j = 0; j < vy; ++j)
            mat.at(vx + j, static_cast<int>(k)) = r.g.coeff(data.v_exponents_y[j]);
    }

    // echelonize the kernel by top exponent so basis degrees are distinct
    auto kernel = nullspace(mat);
    auto lead = [&](const std::vector<Rational>& v) {
        for (int i = static_cast<int>(S.size()) - 1; i >= 0; --i)
            if (!is_zero(v[i])) return i;
        return -1;
    };
    std::vector<std::vector<Rational>> echelon;
    for (auto row : kernel) {
        while (true) {
            const int l = lead(row);
            if (l < 0) break;
            auto hit = std::find_if(echelon.begin(), echelon.end(),
                                    [&](const auto& b) { return lead(b) == l; });
            if (hit == echelon.end()) break;
            const Rational c = row[l] / (*hit)[l];
            for (size_t k = 0; k < row.size(); ++k) row[k] -= c * (*hit)[k];
        }
        if (lead(row) >= 0) echelon.push_back(std::move(row));
    }
    std::sort(echelon.begin(), echelon.end(),
              [&](const auto& u, const auto& v) { return lead(u) < lead(v); });

    std::vector<UniPoly> out;
    for (const auto& row : echelon) {
        UniPoly t;
        for (size_t k = 0; k < S.size(); ++k)
            t = t + UniPoly::monomial(static_cast<int>(S[k]), row[k]);
        out.push_back(primitive_positive(t));
    }
    return out;
}

SeparationResult separate(const Ideal& I, int loop_cap) {
    SeparationResult res;

    if (I.is_zero_ideal()) {  // f - g = 0 forces f = g constant
        res.generators = {pair_one()};
        return res;
    }
    if (I.vars().size() != 2) throw std::invalid_argument("separate: bivariate ideals only");

    if (is_zero_dimensional(I)) {
        auto zd = zero_dim_algebra(I);
        for (const auto& pair : zd.generators) assert_member(pair, I);
        res.generators = std::move(zd.generators);
        return res;
    }

    const Split sp = split(I);
    const MPoly& h = sp.h;

    // principal part univariate: the separated elements of I are exactly the
    // elimination ideal in that variable
    for (int var = 0; var < 2; ++var) {
        const int other = 1 - var;
        if (h.depends_on(var) && !h.depends_on(other)) {
            const UniPoly p = eliminate(I, var);
            if (p.is_zero())
                throw std::logic_error("separate: trivial elimination ideal on univariate path");
            for (int i = 0; i < p.degree(); ++i) {
                PairFG pair;
                (var == 0 ? pair.f : pair.g) = p.shifted(i);
                assert_member(pair, I);
                res.generators.push_back(std::move(pair));
            }
            return res;
        }
    }

    const PrincipalResult pr = minimal_separated_multiple(h);
    if (pr.trivial) {
        res.generators = {pair_one()};
        return res;
    }
    const PairFG a = pr.generator;
    res.a = a;

    const ZeroDimAlgebra zd = zero_dim_algebra(sp.i0).data;
    const int dim_v = zd.dim_v();

    std::vector<UniPoly> certificates;
    std::set<long> degrees;
    int rounds = 0;
    while (semigroup_gcd(Semigroup(degrees)) != 1) {
        if (++rounds > loop_cap)
            throw std::runtime_error("separate: search loop cap exceeded");
        const auto S = first_gaps(Semigroup(degrees), dim_v + 1);
        const auto found = restricted_search(a, zd, S);
        if (found.empty())
            throw std::logic_error("separate: empty kernel despite |S| > dim V");
        const UniPoly& best = found.front();  // least degree: basis is ascending
        certificates.push_back(best);
        degrees.insert(best.degree());
    }

    const auto final_gaps = gaps(Semigroup(degrees));
    if (!final_gaps.empty()) {
        const std::vector<long> S(final_gaps.begin(), final_gaps.end());
        for (auto& t : restricted_search(a, zd, S)) certificates.push_back(std::move(t));
    }

    for (const auto& cert : certificates) {
        PairFG pair = evaluate_at(cert, a);
        assert_member(pair, I);
        res.generators.push_back(std::move(pair));
    }
    res.certificates = std::move(certificates);
    return res;
}

ProjectionReport projected_separability(const MPoly& p, int n_x_vars,
                                        const std::vector<UniPoly>& x_block_images,
                                        const std::vector<UniPoly>& y_block_images) {
    const int n = p.nvars();
    if (static_cast<int>(x_block_images.size()) != n_x_vars ||
        static_cast<int>(x_block_images.size() + y_block_images.size()) != n)
        throw std::invalid_argument("projected_separability: one image per variable required");

    const std::vector<std::string> target{"x", "y"};
    std::vector<MPoly> images;
    for (const auto& u : x_block_images) images.push_back(from_unipoly(u, target, 0));
    for (const auto& u : y_block_images) images.push_back(from_unipoly(u, target, 1));

    ProjectionReport rep{ProjectionOutcome::inconclusive_separable, substitute(p, images), {}};
    if (rep.image.is_zero() || !rep.image.depends_on(0) || !rep.image.depends_on(1)) {
        rep.outcome = ProjectionOutcome::inconclusive_univariate;
        return rep;
    }
    const PrincipalResult pr = minimal_separated_multiple(rep.image);
    if (pr.trivial) {
        rep.outcome = ProjectionOutcome::certified_not_separable;
    } else {
        rep.outcome = ProjectionOutcome::inconclusive_separable;
        rep.image_multiple = pr.generator;
    }
    return rep;
}

}  // namespace sepvars
