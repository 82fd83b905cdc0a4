#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "sepvars/cyclo.hpp"
#include "sepvars/linalg.hpp"
#include "sepvars/numsg.hpp"
#include "sepvars/sepsets.hpp"
#include "sepvars/unipoly.hpp"
#include "test_util.hpp"

using namespace sepvars;
using testutil::Rng;

namespace {

UniPoly up(std::vector<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return UniPoly(c);
}

}  // namespace

TEST_CASE("unipoly basics") {
    const UniPoly x = UniPoly::variable();
    CHECK(UniPoly().degree() == -1);
    CHECK((x + UniPoly(1)) * (x - UniPoly(1)) == up({-1, 0, 1}));
    CHECK(up({0, 1, 1}).degree() == 2);
    CHECK(to_string(up({-1, 0, 1})) == "x^2 - 1");
    CHECK(up({2, 4}).primitive_part() == up({1, 2}));
    CHECK(up({-2, -4}).primitive_part() == up({1, 2}));
    CHECK(up({1, 2, 1}).eval(Rational(2)) == Rational(9));
    CHECK(up({0, 0, 1}).compose(up({1, 1})) == up({1, 2, 1}));
    CHECK(up({1, 1}).pow(2) == up({1, 2, 1}));
    CHECK(up({0, 1, 3}).derivative() == up({1, 6}));
}

TEST_CASE("divrem fixtures") {
    auto [q1, r1] = divrem(up({0, 0, 1}), up({0, 1}));
    CHECK(q1 == up({0, 1}));
    CHECK(r1.is_zero());

    // x^10 + x^8 - x^2 - 1 = (x^2 + 1)(x^8 - 1)
    UniPoly elim({Rational(-1), Rational(0), Rational(-1), Rational(0), Rational(0), Rational(0),
                  Rational(0), Rational(0), Rational(1), Rational(0), Rational(1)});
    auto [q2, r2] = divrem(elim, up({1, 0, 1}));
    CHECK(q2 == up({-1, 0, 0, 0, 0, 0, 0, 0, 1}));
    CHECK(r2.is_zero());

    CHECK_THROWS_AS(divrem(up({1}), UniPoly()), std::domain_error);
}

TEST_CASE("gcd and squarefree fixtures") {
    CHECK(gcd(up({-1, 0, 1}), up({-1, 0, 0, 1})) == up({-1, 1}));
    CHECK(gcd(up({1, 0, 1}), up({2, 0, 1})) == UniPoly(1));
    // (x-1)^2 (x+2)
    UniPoly p = up({-1, 1}) * up({-1, 1}) * up({2, 1});
    CHECK(gcd(p, p.derivative()) == up({-1, 1}));
    CHECK_THROWS_AS(gcd(UniPoly(), UniPoly()), std::domain_error);

    CHECK(squarefree_part(up({1, 0, 2, 0, 1})) == up({1, 0, 1}));
    CHECK(squarefree_part(up({1, -1, 1})) == up({1, -1, 1}));
    CHECK(squarefree_part(up({-1, 1}) * up({-1, 1}) * up({-2, 1})) == up({-1, 1}) * up({-2, 1}));
    CHECK_THROWS_AS(squarefree_part(UniPoly()), std::domain_error);
}

TEST_CASE("resultant fixtures") {
    CHECK(resultant(up({-2, 1}), up({-3, 1})) == Rational(-1));
    CHECK(resultant(up({-1, 1}), up({-1, 1})) == Rational(0));
    CHECK(resultant(up({1, 0, 1}), up({1, 0, 1})) == Rational(0));
    CHECK_THROWS_AS(resultant(UniPoly(), up({1})), std::domain_error);
}

TEST_CASE("arith random properties") {
    Rng rng(20260808);
    for (int trial = 0; trial < 2000; ++trial) {
        UniPoly a = testutil::random_unipoly(rng, 8);
        UniPoly b = testutil::random_unipoly(rng, 8, -9, 9, true);
        auto [q, r] = divrem(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
        if (!a.is_zero()) {
            UniPoly g = gcd(a, b);
            CHECK(divrem(a, g).second.is_zero());
            CHECK(divrem(b, g).second.is_zero());
            CHECK((resultant(a, b) == 0) == (g.degree() > 0));
            UniPoly sf = squarefree_part(a);
            if (sf.degree() > 0) CHECK(gcd(sf, sf.derivative()).is_constant());
        }
    }
}

TEST_CASE("cyclotomic fixtures") {
    CHECK(cyclotomic(1) == up({-1, 1}));
    CHECK(cyclotomic(6) == up({1, -1, 1}));
    CHECK(cyclotomic(12) == up({1, 0, -1, 0, 1}));
    CHECK_THROWS_AS(cyclotomic(0), std::invalid_argument);

    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(36) == 12);

    for (long n = 1; n <= 60; ++n) {
        UniPoly phi = cyclotomic(n);
        CHECK(phi.degree() == euler_phi(n));
        UniPoly zn = UniPoly::monomial(static_cast<int>(n)) - UniPoly(1);
        CHECK(divrem(zn, phi).second.is_zero());
    }
}

TEST_CASE("candidate order enumeration is exhaustive") {
    // every n with phi(n) <= B appears, because phi(n) >= sqrt(n/2)
    for (long b = 1; b <= 12; ++b) {
        auto orders = orders_with_phi_at_most(b);
        for (long n = 1; n <= 4 * b * b + 10; ++n) {
            const bool in = std::find(orders.begin(), orders.end(), n) != orders.end();
            CHECK(in == (euler_phi(n) <= b));
        }
    }
}

TEST_CASE("ratio polynomial fixtures") {
    // single root: single ratio 1
    UniPoly r1 = ratio_polynomial(up({-2, 1}));
    CHECK(r1.monic() == up({-1, 1}));

    // roots 1, 2: ratios 1, 1, 2, 1/2
    UniPoly r2 = ratio_polynomial(up({2, -3, 1}));
    UniPoly expect2 = (up({-1, 1}) * up({-1, 1}) * up({-2, 1}) * up({-1, 2})).monic();
    CHECK(r2.monic() == expect2);

    // primitive 6th roots of unity: ratios 1, 1 and both primitive cube roots
    UniPoly r3 = ratio_polynomial(up({1, -1, 1}));
    UniPoly expect3 = (up({-1, 1}) * up({-1, 1}) * up({1, 1, 1})).monic();
    CHECK(r3.monic() == expect3);

    CHECK_THROWS_AS(ratio_polynomial(UniPoly()), std::invalid_argument);
    CHECK_THROWS_AS(ratio_polynomial(up({0, 1})), std::invalid_argument);
    CHECK_THROWS_AS(ratio_polynomial(up({1, 2, 1})), std::invalid_argument);

    // z = 1 always occurs with multiplicity >= deg f
    Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        UniPoly f = testutil::random_unipoly(rng, 4, -5, 5, true);
        if (f.degree() < 1 || is_zero(f.coeff(0))) continue;
        if (!gcd(f, f.derivative()).is_constant()) continue;
        UniPoly r = ratio_polynomial(f);
        for (int k = 0; k < f.degree(); ++k) {
            CHECK(is_zero(r.eval(Rational(1))));
            r = exact_div(r, up({-1, 1}));
        }
    }
}

TEST_CASE("cyclotomic report fixtures") {
    UniPoly r = up({-1, 1}) * up({-1, 1}) * up({1, 1, 1});  // (z-1)^2 (z^2+z+1)
    auto rep = cyclotomic_report(r, 4);
    CHECK(rep.all_roots_of_unity);
    CHECK(rep.orders_found == std::set<long>{1, 3});
    CHECK(rep.order_lcm == 3);

    auto rep2 = cyclotomic_report(up({-1, 1}), 2);
    CHECK(rep2.all_roots_of_unity);
    CHECK(rep2.order_lcm == 1);

    auto rep3 = cyclotomic_report(up({1, 1, 1}) * up({-2, 1}), 4);
    CHECK_FALSE(rep3.all_roots_of_unity);
    CHECK(rep3.non_cyclotomic_remainder.monic() == up({-2, 1}));

    CHECK_THROWS_AS(cyclotomic_report(UniPoly(), 3), std::invalid_argument);
}

TEST_CASE("ratio report invariant under scaling f(x) -> f(cx)") {
    Rng rng(99);
    const Rational scales[] = {Rational(2), frac(1, 3), Rational(-5)};
    for (int trial = 0; trial < 20; ++trial) {
        UniPoly f = testutil::random_unipoly(rng, 4, -4, 4, true);
        if (f.degree() < 1 || is_zero(f.coeff(0)) || !gcd(f, f.derivative()).is_constant())
            continue;
        auto base = cyclotomic_report(ratio_polynomial(f), f.degree() * f.degree());
        for (const Rational& c : scales) {
            std::vector<Rational> coeffs;
            Rational pw(1);
            for (int i = 0; i <= f.degree(); ++i) {
                coeffs.push_back(f.coeff(i) * pw);
                pw *= c;
            }
            auto scaled = cyclotomic_report(ratio_polynomial(UniPoly(coeffs)),
                                            f.degree() * f.degree());
            CHECK(scaled.all_roots_of_unity == base.all_roots_of_unity);
            CHECK(scaled.orders_found == base.orders_found);
        }
    }
}

TEST_CASE("semigroup fixtures") {
    CHECK(gaps(Semigroup{4, 5}) == std::set<long>{1, 2, 3, 6, 7, 11});
    CHECK(gaps(Semigroup{1}).empty());
    CHECK(gaps(Semigroup{3, 5}) == std::set<long>{1, 2, 4, 7});
    CHECK_THROWS_AS(gaps(Semigroup{4, 6}), std::invalid_argument);

    CHECK(frobenius(Semigroup{4, 5}) == 11);
    CHECK(frobenius(Semigroup{3, 5}) == 7);
    CHECK(frobenius(Semigroup{2, 3}) == 1);
    CHECK(frobenius(Semigroup{1, 7}) == -1);

    CHECK(first_gaps(Semigroup(std::set<long>{}), 4) == std::vector<long>{1, 2, 3, 4});
    CHECK(first_gaps(Semigroup{4}, 5) == std::vector<long>{1, 2, 3, 5, 6});
    CHECK(first_gaps(Semigroup{4, 5}, 10) == std::vector<long>{1, 2, 3, 6, 7, 11});
}

TEST_CASE("semigroup membership vs brute force") {
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<long> dg(2, 12);
        std::set<long> gens;
        for (int k = 0; k < 3; ++k) gens.insert(dg(rng));
        Semigroup s(gens);
        // brute-force coin sums up to 200
        std::vector<bool> reachable(201, false);
        reachable[0] = true;
        for (int n = 1; n <= 200; ++n)
            for (long d : gens)
                if (n - d >= 0 && reachable[n - d]) reachable[n] = true;
        for (int n = 0; n <= 200; ++n) CHECK(semigroup_member(n, s) == reachable[n]);
        if (semigroup_gcd(s) == 1) {
            const long fr = frobenius(s);
            for (long n = fr + 1; n <= fr + 20; ++n) CHECK(semigroup_member(n, s));
        }
    }
    // two coprime generators: frobenius = ab - a - b
    for (long a = 2; a <= 12; ++a)
        for (long b = a + 1; b <= 12; ++b) {
            if (std::gcd(a, b) != 1) continue;
            CHECK(frobenius(Semigroup{a, b}) == a * b - a - b);
        }
}

namespace {

SepSet figure_set(int m, int n, std::initializer_list<std::pair<int, int>> pts) {
    return SepSet(m, n, std::set<std::pair<int, int>>(pts));
}

}  // namespace

TEST_CASE("separated set fixtures from the 6x6 grid") {
    auto diag = figure_set(6, 6, {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}});
    CHECK(is_separated(diag));
    auto quad = figure_set(6, 6, {{2, 0}, {3, 1}, {4, 2}, {5, 3}, {0, 4}, {1, 5},
                                  {4, 0}, {5, 1}, {0, 2}, {1, 3}, {2, 4}, {3, 5}});
    CHECK_FALSE(is_separated(quad));
    CHECK(is_separated(SepSet(6, 6, {})));

    // closure of the quadratic-factor set is the x^3 - y^3 set
    SepSet closure = separated_closure(quad);
    std::set<std::pair<int, int>> expect;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if ((i + j) % 2 == 0) expect.emplace(i, j);
    CHECK(closure.points == expect);
}

TEST_CASE("closure properties on random subsets") {
    Rng rng(123);
    std::uniform_int_distribution<int> coin(0, 3);
    for (int trial = 0; trial < 300; ++trial) {
        std::set<std::pair<int, int>> pts, pts2;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) {
                if (coin(rng) == 0) pts.emplace(i, j);
                if (coin(rng) == 0) pts2.emplace(i, j);
            }
        SepSet t(6, 6, pts);
        SepSet c = separated_closure(t);
        CHECK(is_separated(c));
        CHECK(std::includes(c.points.begin(), c.points.end(), t.points.begin(), t.points.end()));
        CHECK(separated_closure(c).points == c.points);  // idempotent

        // monotone
        std::set<std::pair<int, int>> uni = pts;
        uni.insert(pts2.begin(), pts2.end());
        SepSet cu = separated_closure(SepSet(6, 6, uni));
        CHECK(std::includes(cu.points.begin(), cu.points.end(), c.points.begin(), c.points.end()));

        // permutation equivariance
        std::vector<int> sigma{3, 0, 5, 1, 4, 2}, tau{2, 4, 0, 5, 3, 1};
        std::set<std::pair<int, int>> mapped;
        for (auto& [i, j] : pts) mapped.emplace(sigma[i], tau[j]);
        SepSet cm = separated_closure(SepSet(6, 6, mapped));
        std::set<std::pair<int, int>> expect;
        for (auto& [i, j] : c.points) expect.emplace(sigma[i], tau[j]);
        CHECK(cm.points == expect);
    }
}

namespace {

// textbook Gauss-Jordan over rationals: the independent reference for the
// fraction-free implementation
std::vector<int> plain_rref(QMatrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!is_zero(m.at(i, c))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        const Rational inv = Rational(1) / m.at(r, c);
        for (int j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            const Rational f = m.at(i, c);
            if (is_zero(f)) continue;
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

TEST_CASE("rref serial, parallel and the plain-rational reference agree") {
    Rng rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<int> dim(1, 14);
        const int r = dim(rng), c = dim(rng);
        QMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                m.at(i, j) = frac(testutil::random_coeff(rng).get_num(),
                                  1 + abs(testutil::random_coeff(rng, 1, 7).get_num()));
        // engineered rank deficiencies
        if (r >= 2 && trial % 3 == 0) {
            std::uniform_int_distribution<int> dr(0, r - 1);
            const int a = dr(rng), b = dr(rng);
            if (a != b)
                for (int j = 0; j < c; ++j) m.at(a, j) = m.at(b, j) * frac(3, 2);
        }
        QMatrix ms = m, mp = m, mr = m;
        auto ps = rref_serial(ms);
        auto pp = rref_parallel(mp);
        auto pr = plain_rref(mr);
        CHECK(ps == pp);
        CHECK(ms == mp);
        CHECK(ps == pr);
        CHECK(ms == mr);
        CHECK(nullspace(m) == nullspace_serial(m));
    }
}

TEST_CASE("nullspace fixtures") {
    QMatrix m(2, 3);  // x + y + z = 0, y - z = 0 -> span{(-2, 1, 1)}
    m.at(0, 0) = 1; m.at(0, 1) = 1; m.at(0, 2) = 1;
    m.at(1, 1) = 1; m.at(1, 2) = -1;
    auto ns = nullspace(m);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == std::vector<Rational>{Rational(-2), Rational(1), Rational(1)});

    // nullspace vectors are actual kernel elements and RREF-canonical
    Rng rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<int> dim(1, 12);
        const int r = dim(rng), c = dim(rng);
        QMatrix a(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) a.at(i, j) = testutil::random_coeff(rng, -4, 4);
        for (const auto& v : nullspace(a))
            for (int i = 0; i < r; ++i) {
                Rational dot(0);
                for (int j = 0; j < c; ++j) dot += a.at(i, j) * v[j];
                CHECK(is_zero(dot));
            }
    }
}

TEST_CASE("bareiss determinant") {
    auto det = [](std::vector<std::vector<long>> rows) {
        std::vector<std::vector<Rational>> m;
        for (auto& r : rows) {
            m.emplace_back();
            for (long v : r) m.back().emplace_back(v);
        }
        return bareiss_determinant<Rational>(
            m, Rational(1), [](const Rational& a, const Rational& b) { return a / b; },
            [](const Rational& x) { return is_zero(x); });
    };
    CHECK(det({{2, 0}, {0, 3}}) == Rational(6));
    CHECK(det({{1, 2}, {2, 4}}) == Rational(0));
    CHECK(det({{0, 1, 2}, {1, 0, 3}, {4, 5, 0}}) == Rational(22));
}
