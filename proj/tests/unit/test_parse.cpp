#include <doctest.h>

#include <sstream>

#include "gridzero/csv.hpp"
#include "gridzero/errors.hpp"
#include "gridzero/parse.hpp"
#include "support/oracles.hpp"

using namespace gridzero;
using gridzero::testing::poly;
using gridzero::testing::Rng;

TEST_CASE("grammar essentials") {
    CHECK(parse_polynomial("x*s - y + t") ==
          Polynomial::variable(Var::x) * Polynomial::variable(Var::s) -
              Polynomial::variable(Var::y) + Polynomial::variable(Var::t));
    CHECK(parse_polynomial("(x-s)^2 + (y-t)^2 - 1").total_degree() == 2);
    Polynomial mixed = parse_polynomial("(1/2)*x + i*t");
    CHECK(mixed.coefficient(Monomial::var(Var::x)) == GaussRational::from_fraction(1, 2));
    CHECK(mixed.coefficient(Monomial::var(Var::t)) == GaussRational::unit_i());
    CHECK(parse_polynomial("  - x ^ 2 ") == poly("-1*x^2"));
    CHECK(parse_polynomial("3/6") == Polynomial::constant(GaussRational::from_fraction(1, 2)));
}

TEST_CASE("grammar rejections carry positions") {
    CHECK_THROWS_AS(parse_polynomial("2x"), SyntaxError);        // juxtaposition
    CHECK_THROWS_AS(parse_polynomial("x y"), SyntaxError);       // juxtaposition
    CHECK_THROWS_AS(parse_polynomial("x *"), SyntaxError);
    CHECK_THROWS_AS(parse_polynomial("(x"), SyntaxError);
    CHECK_THROWS_AS(parse_polynomial(""), SyntaxError);
    CHECK_THROWS_AS(parse_polynomial("1/0"), SyntaxError);
    CHECK_THROWS_AS(parse_polynomial("x^y"), SyntaxError);
    CHECK_THROWS_AS(parse_polynomial("z + 1"), UnknownVariableError);
    CHECK_THROWS_AS(parse_polynomial("x + foo"), UnknownVariableError);
    try {
        parse_polynomial("x +\n z");
    } catch (const UnknownVariableError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 2);
    }
}

TEST_CASE("print/parse round-trip on handpicked polynomials") {
    for (const char* text :
         {"0", "1", "-1", "x*s - y + t", "(x-s)^2 + (y-t)^2 - 1", "1/2*x + i*t",
          "x^2*y^3*s*t^4 - 7/3", "i", "-i*t", "3/2*i*x", "(1+2*i)*x*s - (1/2)*y"}) {
        Polynomial p = parse_polynomial(text);
        CHECK(parse_polynomial(p.str()) == p);
    }
}

TEST_CASE("print/parse round-trip on fuzzed polynomials") {
    Rng rng(67);
    for (int iter = 0; iter < 300; ++iter) {
        Polynomial p = rng.polynomial(kMaskAll, 5, 7);
        CHECK(parse_polynomial(p.str()) == p);
    }
    // Coefficients with imaginary parts everywhere.
    for (int iter = 0; iter < 100; ++iter) {
        Polynomial p(kMaskAll);
        for (int k = 0; k < 4; ++k)
            p.add_term(rng.rational(5, 3, 80), rng.monomial(kMaskAll, 4));
        if (p.is_zero()) continue;
        CHECK(parse_polynomial(p.str()) == p);
    }
}

TEST_CASE("csv loading") {
    {
        std::istringstream in("u,v\n0,1\n0,2\n");
        PointSet pts = load_points_stream(in);
        CHECK(pts.size() == 2);
        CHECK(pts[0] == gridzero::testing::pt(0, 1));
    }
    {
        std::istringstream in("u,v\n1/2, 3\n");
        PointSet pts = load_points_stream(in);
        CHECK(pts[0].u == GaussRational::from_fraction(1, 2));
        CHECK(pts[0].v == GaussRational(3));
    }
    {
        std::istringstream in("u,v\n1/2+2/3*i, -i\n");
        PointSet pts = load_points_stream(in);
        CHECK(pts[0].u == GaussRational(mpq_class(1, 2), mpq_class(2, 3)));
        CHECK(pts[0].v == GaussRational(mpq_class(0), mpq_class(-1)));
    }
    {
        std::istringstream in("u,v\n1,2\n1,2\n");
        CHECK_THROWS_AS(load_points_stream(in), DuplicatePointError);
    }
    {
        std::istringstream in("u,v\n1,2\n1, 2 \n");
        try {
            load_points_stream(in);
            FAIL("expected DuplicatePointError");
        } catch (const DuplicatePointError& e) {
            CHECK(e.row == 3);
        }
    }
    {
        std::istringstream in("a,b\n1,2\n");
        CHECK_THROWS_AS(load_points_stream(in), ParseError);
    }
    {
        std::istringstream in("u,v\n1,x\n");
        CHECK_THROWS_AS(load_points_stream(in), ParseError);
    }
}

TEST_CASE("csv round-trip") {
    Rng rng(71);
    PointSet pts = rng.point_set(25, 40, 4);
    std::ostringstream out;
    save_points_stream(pts, out);
    std::istringstream in(out.str());
    PointSet back = load_points_stream(in);
    REQUIRE(back.size() == pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) CHECK(back[i] == pts[i]);
}
