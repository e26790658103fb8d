#include <doctest.h>

#include "gridzero/division.hpp"
#include "gridzero/errors.hpp"
#include "gridzero/gcd.hpp"
#include "support/oracles.hpp"

using namespace gridzero;
using gridzero::testing::poly;
using gridzero::testing::Rng;

TEST_CASE("worked gcds") {
    CHECK(gcd_multivariate(poly("x^2 - y^2"), poly("x - y")) == poly("x - y"));
    CHECK(gcd_multivariate(poly("x*s + y*t"), poly("x*s - y + t")) == poly("1"));
    // Any common factor of the pair above would divide their difference
    // y*t + y - t, which does not divide either input.
    CHECK(!divides(poly("y*t + y - t"), poly("x*s + y*t")));

    Polynomial f = poly("2*x^2*s - 4*y");
    CHECK(gcd_multivariate(f, f) == make_monic(f));
    CHECK_THROWS_AS(gcd_multivariate(Polynomial(), Polynomial()), BothZeroError);
    CHECK(gcd_multivariate(f, Polynomial()) == make_monic(f));
}

TEST_CASE("gcd divides both inputs; common factors are extracted") {
    Rng rng(53);
    int checked = 0;
    for (int iter = 0; iter < 200 && checked < 60; ++iter) {
        Polynomial a = rng.polynomial(kMaskAll, 3, 3);
        Polynomial b = rng.polynomial(kMaskAll, 3, 3);
        Polynomial g = gcd_multivariate(a, b);
        CHECK(divides(g, a));
        CHECK(divides(g, b));
        if (!g.is_constant()) continue;
        // a, b coprime: gcd(a*c, b*c) must be c up to a scalar.
        Polynomial c = rng.polynomial(kMaskAll, 2, 3);
        Polynomial gc = gcd_multivariate(a * c, b * c);
        CHECK(gc == make_monic(c));
        ++checked;
    }
    CHECK(checked >= 40);
}

TEST_CASE("gcd of products with shared factor") {
    Rng rng(59);
    for (int iter = 0; iter < 40; ++iter) {
        Polynomial c = rng.nonconstant_polynomial(kMaskAll, 2, 3);
        Polynomial a = rng.polynomial(kMaskXY, 2, 3);
        Polynomial b = rng.polynomial(kMaskST, 2, 3);
        Polynomial g = gcd_multivariate(a * c, b * c);
        // c divides the gcd; the gcd divides both products.
        CHECK(divides(c, g));
        CHECK(divides(g, a * c));
        CHECK(divides(g, b * c));
    }
}

TEST_CASE("squarefree part: worked examples") {
    {
        auto [sf, was] = squarefree_part(poly("(x - y)^2"));
        CHECK(sf == poly("x - y"));
        CHECK(!was);
    }
    {
        // Over Q(i) this splits into (x+iy)(x-iy), two distinct factors.
        CHECK(poly("(x + i*y)*(x - i*y)") == poly("x^2 + y^2"));
        auto [sf, was] = squarefree_part(poly("x^2 + y^2"));
        CHECK(sf == poly("x^2 + y^2"));
        CHECK(was);
    }
    {
        auto [sf, was] = squarefree_part(poly("x"));
        CHECK(sf == poly("x"));
        CHECK(was);
    }
    CHECK_THROWS_AS(squarefree_part(poly("7")), ConstantInputError);
}

TEST_CASE("squarefree part: joint gcd with the partials is constant, zero sets agree") {
    Rng rng(61);
    for (int iter = 0; iter < 40; ++iter) {
        Polynomial a = rng.nonconstant_polynomial(kMaskAll, 2, 3);
        Polynomial f = a * a * rng.polynomial(kMaskAll, 2, 2);
        if (f.is_constant()) continue;
        auto [sf, was] = squarefree_part(f);
        (void)was;
        CHECK(is_squarefree(sf));
        // Squarefree means the gcd with all partials jointly is constant
        // (a single partial can still share the factors free of that
        // variable, e.g. x*y with d/dx).
        Polynomial joint = sf;
        VarMask used = sf.used_vars();
        for (int v = 0; v < 4; ++v) {
            if (!(used & (1u << v))) continue;
            Polynomial d = sf.derivative(static_cast<Var>(v));
            if (d.is_zero()) continue;
            joint = gcd_multivariate(joint, d);
        }
        CHECK(joint.is_constant());
        // Zero/nonzero agreement on random rational points.
        for (int k = 0; k < 100; ++k) {
            VarValues at{{Var::x, rng.rational()}, {Var::y, rng.rational()},
                         {Var::s, rng.rational()}, {Var::t, rng.rational()}};
            CHECK(f.evaluate(at).is_zero() == sf.evaluate(at).is_zero());
        }
    }
}
