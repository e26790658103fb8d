#include <doctest.h>

#include "gridzero/division.hpp"
#include "gridzero/errors.hpp"
#include "support/oracles.hpp"

using namespace gridzero;
using gridzero::testing::poly;
using gridzero::testing::Rng;

TEST_CASE("worked divisions, verified by re-multiplication") {
    {
        auto [q, r] = divide_single(poly("x*s + y*t"), poly("x"));
        CHECK(q == poly("s"));
        CHECK(r == poly("y*t"));
        CHECK(poly("x") * q + r == poly("x*s + y*t"));
    }
    {
        auto [q, r] = divide_single(poly("x*s - y + t"), poly("x"));
        CHECK(q == poly("s"));
        CHECK(r == poly("-y + t"));
        CHECK(poly("x") * q + r == poly("x*s - y + t"));
    }
    {
        Polynomial g = poly("x^2*y - s + 3");
        auto [q, r] = divide_single(g, g);
        CHECK(q == poly("1"));
        CHECK(r.is_zero());
    }
    CHECK_THROWS_AS(divide_single(poly("x"), Polynomial()), ZeroDivisorError);
}

TEST_CASE("division identity, remainder condition and degree bound on fuzzed input") {
    Rng rng(41);
    for (OrderKind kind : {OrderKind::lex, OrderKind::grlex, OrderKind::grevlex}) {
        MonomialOrder order{kind, {Var::x, Var::y, Var::s, Var::t}};
        for (int iter = 0; iter < 150; ++iter) {
            Polynomial f = rng.polynomial(kMaskAll, 6, 8);
            Polynomial g = rng.polynomial(kMaskAll, 3, 4);
            auto [q, r] = divide_single(f, g, order);
            CHECK(g * q + r == f);
            Monomial lm = g.leading_monomial(order);
            for (const auto& [m, c] : r.terms()) {
                (void)c;
                CHECK(!lm.divides(m));
            }
            if (order.respects_degree() && !q.is_zero())
                CHECK(q.total_degree() <= f.total_degree() - g.total_degree());
        }
    }
}

TEST_CASE("exact division detects divisibility") {
    Rng rng(43);
    for (int iter = 0; iter < 100; ++iter) {
        Polynomial a = rng.polynomial(kMaskAll, 3, 4);
        Polynomial b = rng.polynomial(kMaskAll, 3, 4);
        auto q = exact_divide(a * b, b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
    }
    CHECK(!exact_divide(poly("x + 1"), poly("x")).has_value());
}

TEST_CASE("coefficient decomposition") {
    {
        CoefficientDecomposition d = coefficient_decompose(poly("x*s + y*t"), BasePair::xy);
        CHECK(d.coefficients.at({1, 0}) == poly("s"));
        CHECK(d.coefficients.at({0, 1}) == poly("t"));
        CHECK(d.coefficients.size() == 2);
    }
    {
        CoefficientDecomposition d = coefficient_decompose(poly("-y + t"), BasePair::xy);
        CHECK(d.coefficients.at({0, 1}) == poly("-1"));
        CHECK(d.coefficients.at({0, 0}) == poly("t"));
    }
    {
        CoefficientDecomposition d = coefficient_decompose(poly("5"), BasePair::xy);
        CHECK(d.coefficients.at({0, 0}) == poly("5"));
    }
}

TEST_CASE("decompose then reassemble is the identity on fuzzed polynomials") {
    Rng rng(47);
    for (int iter = 0; iter < 150; ++iter) {
        Polynomial f = rng.polynomial(kMaskAll, 5, 8);
        for (BasePair base : {BasePair::xy, BasePair::st}) {
            CoefficientDecomposition d = coefficient_decompose(f, base);
            CHECK(d.reassemble() == f);
        }
    }
}
