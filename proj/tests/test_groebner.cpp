#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sepvars/groebner.hpp"
#include "sepvars/parse.hpp"
#include "test_util.hpp"

using namespace sepvars;
using testutil::Rng;

namespace {

const std::vector<std::string> XY{"x", "y"};
MPoly P(const std::string& s) { return parse_poly(s, XY); }

Ideal example_23() {
    return Ideal({P("x^2*y^2 - 1"), P("y^5 + y^3 + x*y^2 + x")});
}

UniPoly U(const std::string& s, int var = 0) { return to_unipoly(parse_poly(s, XY), var); }

// direct S-polynomial, independent of the engine internals
MPoly s_poly(const MPoly& f, const MPoly& g, const TermOrder& ord) {
    auto leading = [&](const MPoly& p) {
        const Exponents* best = nullptr;
        for (const auto& [e, c] : p.terms())
            if (!best || ord.less(*best, e)) best = &e;
        return *best;
    };
    const Exponents lf = leading(f), lg = leading(g);
    Exponents lcm(lf.size());
    for (size_t i = 0; i < lf.size(); ++i) lcm[i] = std::max(lf[i], lg[i]);
    Exponents sf(lf.size()), sg(lf.size());
    for (size_t i = 0; i < lf.size(); ++i) {
        sf[i] = lcm[i] - lf[i];
        sg[i] = lcm[i] - lg[i];
    }
    const MPoly mf = MPoly::monomial(f.vars(), sf, Rational(1) / f.coeff(lf));
    const MPoly mg = MPoly::monomial(g.vars(), sg, Rational(1) / g.coeff(lg));
    return mf * f - mg * g;
}

}  // namespace

TEST_CASE("groebner basis fixtures") {
    Ideal trivial({P("x"), P("y")});
    auto b1 = trivial.basis(TermOrder::degrevlex());
    REQUIRE(b1.size() == 2);
    CHECK(b1[0] == P("x"));
    CHECK(b1[1] == P("y"));

    Ideal unit({P("3")});
    auto b2 = unit.basis(TermOrder::degrevlex());
    REQUIRE(b2.size() == 1);
    CHECK(b2[0] == P("1"));

    // cross-checked reduced degrevlex basis
    auto b3 = example_23().basis(TermOrder::degrevlex());
    std::vector<MPoly> expect{P("y^5 + x*y^2 + y^3 + x"), P("x^2*y^2 - 1"),
                              P("x^3 + y^3 + x + y")};
    REQUIRE(b3.size() == 3);
    for (const auto& e : expect)
        CHECK(std::find(b3.begin(), b3.end(), e) != b3.end());
}

TEST_CASE("elimination fixtures") {
    Ideal I = example_23();
    CHECK(eliminate(I, 0) == U("x^10 + x^8 - x^2 - 1"));
    CHECK(eliminate(I, 1) == U("y^10 + y^8 - y^2 - 1", 1));
    CHECK(eliminate(Ideal({P("x")}), 1).is_zero());
    CHECK(eliminate(Ideal({P("2*x^2 + 2")}), 0) == U("x^2 + 1"));
}

TEST_CASE("normal form fixtures") {
    Ideal I = example_23();
    CHECK(normal_form(P("(x^2*y^2 - 1)*(x + y^3)"), I).is_zero());
    CHECK(normal_form(P("x"), Ideal({P("x - y")}), TermOrder::lex()) == P("y"));

    // x^10 is congruent to -x^8 + x^2 + 1 modulo I; the canonical normal form
    // of both is the same cross-checked value
    MPoly nf = normal_form(P("x^10"), I);
    CHECK(nf == normal_form(P("-x^8 + x^2 + 1"), I));
    CHECK(nf == P("2*x^2 + x*y^3 + x*y + y^4"));
    CHECK(normal_form(P("x^10 + x^8 - x^2 - 1"), I).is_zero());
}

TEST_CASE("intersect fixtures") {
    Ideal a = intersect(Ideal({P("x")}), Ideal({P("y")}));
    CHECK(ideal_equals(a, Ideal({P("x*y")})));

    Ideal b = intersect(Ideal({P("x")}), Ideal({P("x^2"), P("y")}));
    CHECK(ideal_equals(b, Ideal({P("x^2"), P("x*y")})));

    Ideal I = example_23();
    CHECK(ideal_equals(intersect(I, Ideal({P("1")})), I));
}

TEST_CASE("zero dimensionality") {
    CHECK(is_zero_dimensional(Ideal({P("x^2"), P("y^3")})));
    CHECK_FALSE(is_zero_dimensional(Ideal({P("x")})));
    CHECK(is_zero_dimensional(example_23()));
    CHECK(is_zero_dimensional(Ideal({P("1")})));
    CHECK_THROWS_AS(is_zero_dimensional(Ideal()), std::domain_error);
}

TEST_CASE("ideal algebra helpers") {
    Ideal I({P("x^2"), P("x*y")});
    CHECK(ideal_equals(ideal_power(Ideal({P("x"), P("y")}), 2),
                       Ideal({P("x^2"), P("x*y"), P("y^2")})));
    CHECK(contains(I, P("x^2*y + x*y")));
    CHECK_FALSE(contains(I, P("x")));
    CHECK(is_unit_ideal(Ideal({P("x"), P("x + 1")})));
    CHECK_FALSE(is_unit_ideal(I));
    CHECK(ideal_equals(ideal_sum(Ideal({P("x^2")}), Ideal({P("x*y")})), I));
}

TEST_CASE("buchberger random properties") {
    Rng rng(8642);
    const TermOrder orders[] = {TermOrder::degrevlex(), TermOrder::lex(), TermOrder::block(2u)};
    for (int trial = 0; trial < 60; ++trial) {
        MPoly f = testutil::random_mpoly(rng, XY, 3, -3, 3, true);
        MPoly g = testutil::random_mpoly(rng, XY, 3, -3, 3, true);
        Ideal I({f, g});
        for (const auto& ord : orders) {
            auto basis = I.basis(ord);
            // generators reduce to zero
            CHECK(normal_form(f, I, ord).is_zero());
            CHECK(normal_form(g, I, ord).is_zero());
            // every S-polynomial of the returned basis reduces to zero
            for (size_t i = 0; i < basis.size(); ++i)
                for (size_t j = i + 1; j < basis.size(); ++j)
                    CHECK(normal_form(s_poly(basis[i], basis[j], ord), I, ord).is_zero());
        }
        // normal form is idempotent and Q-linear
        MPoly u = testutil::random_mpoly(rng, XY, 4, -4, 4);
        MPoly v = testutil::random_mpoly(rng, XY, 4, -4, 4);
        MPoly nu = normal_form(u, I), nv = normal_form(v, I);
        CHECK(normal_form(nu, I) == nu);
        CHECK(normal_form(u + v * Rational(3), I) == nu + nv * Rational(3));
        CHECK((normal_form(u, I).is_zero()) == contains(I, u));
    }
}

TEST_CASE("eliminate output generates the elimination ideal") {
    Rng rng(1001);
    for (int trial = 0; trial < 40; ++trial) {
        UniPoly px = testutil::random_unipoly(rng, 3, -3, 3, true);
        UniPoly qy = testutil::random_unipoly(rng, 3, -3, 3, true);
        if (px.degree() < 1 || qy.degree() < 1) continue;
        Ideal I({from_unipoly(px, XY, 0), from_unipoly(qy, XY, 1)});
        UniPoly ex = eliminate(I, 0);
        CHECK(ex == px.monic());
        // the eliminant is a member
        CHECK(contains(I, from_unipoly(ex, XY, 0)));
    }
}

TEST_CASE("intersect containment on random ideals") {
    Rng rng(307);
    for (int trial = 0; trial < 25; ++trial) {
        Ideal I({testutil::random_mpoly(rng, XY, 2, -3, 3, true),
                 testutil::random_mpoly(rng, XY, 2, -3, 3, true)});
        Ideal J({testutil::random_mpoly(rng, XY, 2, -3, 3, true)});
        Ideal K = intersect(I, J);
        for (const auto& g : K.generators()) {
            CHECK(contains(I, g));
            CHECK(contains(J, g));
        }
        // elements of both I and J reduce to zero modulo the intersection
        MPoly w = testutil::random_mpoly(rng, XY, 2, -2, 2);
        for (const auto& gi : I.generators())
            for (const auto& gj : J.generators()) CHECK(contains(K, gi * gj * w));
    }
}

TEST_CASE("variable cap") {
    std::vector<std::string> five{"a", "b", "c", "d", "e"};
    CHECK_THROWS_AS(Ideal({MPoly::variable(five, 0)}), std::invalid_argument);
}

TEST_CASE("rem_x is reduction modulo the principal ideal") {
    Rng rng(515);
    for (int trial = 0; trial < 60; ++trial) {
        // divisor with constant leading x-coefficient
        MPoly p = testutil::random_mpoly(rng, XY, 3, -3, 3, true);
        const int dx = p.degree_in(0);
        Exponents top{dx + 1, 0};
        p.add_term(top, Rational(1 + (trial % 3)));
        const MPoly f = testutil::random_mpoly(rng, XY, 5, -4, 4);
        const MPoly r = rem_x(f, p);
        CHECK(r.degree_in(0) < p.degree_in(0));
        CHECK(normal_form(f - r, Ideal({p})).is_zero());
    }
}
