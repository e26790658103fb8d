#include <doctest.h>

#include "gridzero/cartesian.hpp"
#include "gridzero/errors.hpp"
#include "support/oracles.hpp"

using namespace gridzero;
using gridzero::testing::poly;
using gridzero::testing::pt;
using gridzero::testing::Rng;

namespace {

const CartesianWitness& witness_of(const CartesianOutcome& o) {
    REQUIRE(succeeded(o));
    return std::get<CartesianWitness>(o);
}

const FailureCertificate& certificate_of(const CartesianOutcome& o) {
    REQUIRE(!succeeded(o));
    return std::get<FailureCertificate>(o);
}

}  // namespace

TEST_CASE("one-dimensional test: worked examples") {
    {
        auto o = alon_1d_test(poly("x*y"), poly("x"), poly("y"));
        const auto& w = witness_of(o);
        CHECK(w.g * w.h + w.k * w.l == poly("x*y"));
    }
    {
        auto o = alon_1d_test(poly("x + y"), poly("x"), poly("y"));
        const auto& w = witness_of(o);
        CHECK(w.h == poly("1"));
        CHECK(w.l == poly("1"));
    }
    {
        auto o = alon_1d_test(poly("x + y + 1"), poly("x"), poly("y"));
        const auto& c = certificate_of(o);
        CHECK(c.i == 0);
        CHECK(c.residue == poly("y + 1"));
        CHECK(c.reduction_remainder == poly("1"));
        // The certified residue really is indivisible.
        CHECK(!divides(poly("y"), c.residue));
    }
    CHECK_THROWS_AS(alon_1d_test(poly("x*y"), poly("x^2"), poly("y")), NotSquarefreeError);
    {
        // On request the divisors are replaced by their squarefree parts.
        auto o = alon_1d_test(poly("x*y"), poly("x^2"), poly("y"), true);
        const auto& w = witness_of(o);
        CHECK(w.g == poly("x"));
        CHECK(w.g_reduced);
    }
    CHECK_THROWS_AS(alon_1d_test(poly("x"), poly("2"), poly("y")), ConstantDivisorError);
}

TEST_CASE("cartesian test: worked examples") {
    {
        auto o = cartesian_test(poly("x*s + y*t"), poly("x"), poly("t"));
        const auto& w = witness_of(o);
        CHECK(w.h == poly("s"));
        CHECK(w.l == poly("y"));
        CHECK(w.g * w.h + w.k * w.l == poly("x*s + y*t"));
    }
    {
        auto o = cartesian_test(poly("x*s - y + t"), poly("x"), poly("t"));
        const auto& c = certificate_of(o);
        CHECK(c.i == 0);
        CHECK(c.j == 1);
        CHECK(c.residue == poly("-1"));
        CHECK(!divides(poly("t"), c.residue));
    }
    CHECK_THROWS_AS(cartesian_test(Polynomial(), poly("x"), poly("t")), ZeroPolynomialError);
    CHECK_THROWS_AS(cartesian_test(poly("x*s"), poly("3"), poly("t")), ConstantDivisorError);
    CHECK_THROWS_AS(cartesian_test(poly("x*s"), poly("s"), poly("t")), VariableDomainError);
    {
        // Non-squarefree G is replaced by its squarefree part and flagged;
        // the zero set is unchanged, which is all the geometry needs.
        auto o = cartesian_test(poly("x^2*s"), poly("x^2"), poly("t"));
        const auto& w = witness_of(o);
        CHECK(w.g == poly("x"));
        CHECK(w.g_reduced);
        CHECK(!w.k_reduced);
        CHECK(w.assemble() == poly("x^2*s"));
    }
}

TEST_CASE("cartesian test: assembled instances round-trip") {
    Rng rng(101);
    int done = 0;
    while (done < 60) {
        Polynomial g = rng.nonconstant_polynomial(kMaskXY, 3, 3);
        Polynomial k = rng.nonconstant_polynomial(kMaskST, 3, 3);
        if (!is_squarefree(g) || !is_squarefree(k)) continue;
        Polynomial h = rng.polynomial(kMaskAll, 3, 3);
        Polynomial l = rng.polynomial(kMaskAll, 3, 3);
        Polynomial f = g * h + k * l;
        if (f.is_zero()) continue;
        auto o = cartesian_test(f, g, k);
        const auto& w = witness_of(o);
        CHECK(w.g * w.h + w.k * w.l == f);
        CHECK(w.h.total_degree() <= f.total_degree() - g.total_degree());
        CHECK(w.l.total_degree() <= f.total_degree() - k.total_degree());
        ++done;
    }
}

TEST_CASE("cartesian test under lex order still certifies") {
    MonomialOrder lex{OrderKind::lex, {Var::x, Var::y, Var::s, Var::t}};
    auto o = cartesian_test(poly("x*s + y*t"), poly("x"), poly("t"), lex);
    const auto& w = witness_of(o);
    CHECK(w.g * w.h + w.k * w.l == poly("x*s + y*t"));
}

TEST_CASE("failure certificates carry indivisible residues on fuzzed non-examples") {
    Rng rng(103);
    int done = 0;
    while (done < 60) {
        Polynomial g = rng.nonconstant_polynomial(kMaskXY, 3, 3);
        Polynomial k = rng.nonconstant_polynomial(kMaskST, 3, 3);
        if (!is_squarefree(g) || !is_squarefree(k)) continue;
        Polynomial f = g * rng.polynomial(kMaskAll, 2, 3) + k * rng.polynomial(kMaskAll, 2, 3);
        // A lone (x,y)-monomial below the leading monomial of g breaks the
        // decomposition: its remainder cell gains a constant K cannot divide.
        f += Polynomial::term(rng.nonzero_rational(), Monomial::one());
        if (f.is_zero()) continue;
        auto o = cartesian_test(f, g, k);
        const auto& c = certificate_of(o);
        CHECK(!divides(k, c.residue));
        CHECK(!c.reduction_remainder.is_zero());
        ++done;
    }
}

TEST_CASE("witness soundness: the product of curve samples lies in Z(F)") {
    // Graph curves make rational sampling of Z(G) and Z(K) trivial; the
    // certified F must vanish on every sampled pair.
    Rng rng(109);
    Polynomial G = poly("y - x^2 - 1");
    Polynomial K = poly("t - 3*s");
    Polynomial F = G * rng.polynomial(kMaskAll, 2, 3) + K * rng.polynomial(kMaskAll, 2, 3);
    REQUIRE(!F.is_zero());
    auto o = cartesian_test(F, G, K);
    const auto& w = witness_of(o);
    for (int k = 0; k < 200; ++k) {
        GaussRational xa = rng.rational(20, 4, 0);
        GaussRational sa = rng.rational(20, 4, 0);
        Point p{xa, xa * xa + GaussRational(1)};
        Point q{sa, GaussRational(3) * sa};
        CHECK(w.g.evaluate({{Var::x, p.u}, {Var::y, p.v}}).is_zero());
        CHECK(w.k.evaluate({{Var::s, q.u}, {Var::t, q.v}}).is_zero());
        CHECK(F.evaluate({{Var::x, p.u}, {Var::y, p.v}, {Var::s, q.u}, {Var::t, q.v}}).is_zero());
    }
}

TEST_CASE("trivial factor probe") {
    {
        auto w = trivial_cartesian_probe(poly("t*(x*s + y)"));
        REQUIRE(w.has_value());
        CHECK(w->k == poly("t"));
        CHECK(w->l == poly("x*s + y"));
        CHECK(w->h.is_zero());
        CHECK(w->g == poly("x"));
    }
    CHECK(!trivial_cartesian_probe(poly("x*s + y*t")).has_value());
    {
        auto w = trivial_cartesian_probe(poly("x^2*s + x*t"));
        REQUIRE(w.has_value());
        CHECK(w->g == poly("x"));
        CHECK(w->h == poly("x*s + t"));
        CHECK(w->l.is_zero());
    }
    CHECK_THROWS_AS(trivial_cartesian_probe(Polynomial()), ZeroPolynomialError);
}

TEST_CASE("degenerate points") {
    {
        PointSet candidates({pt(0, 0), pt(1, 0)});
        auto pts = degenerate_points(poly("x*s + y*t"), candidates);
        REQUIRE(pts.size() == 1);
        CHECK(pts[0] == pt(0, 0));
    }
    {
        PointSet candidates({pt(0, 0), pt(3, 7), pt(-1, 2)});
        CHECK(degenerate_points(poly("x*s - y + t"), candidates).empty());
    }
    {
        // (i, 1) kills s^2 + t^2 exactly because i^2 + 1 = 0.
        Point qi{GaussRational::unit_i(), GaussRational(1)};
        PointSet candidates({qi, pt(1, 1)});
        Polynomial F = poly("(s^2 + t^2)*x + (s^2 + t^2)*y");
        auto pts = degenerate_points(F, candidates);
        REQUIRE(pts.size() == 1);
        CHECK(pts[0] == qi);
    }
}

TEST_CASE("degenerate points stay within d^2 when no trivial factor exists") {
    Rng rng(107);
    // 20 x 20 rational candidate grid.
    std::vector<Point> grid;
    for (int i = 1; i <= 20; ++i)
        for (int j = 1; j <= 20; ++j)
            grid.push_back({GaussRational::from_fraction(i, 2), GaussRational::from_fraction(j, 3)});
    PointSet candidates(std::move(grid));
    int done = 0;
    while (done < 30) {
        Polynomial f = rng.polynomial(kMaskAll, 5, 6);
        if (f.is_constant()) continue;
        if (trivial_cartesian_probe(f).has_value()) continue;
        auto pts = degenerate_points(f, candidates);
        std::size_t d = static_cast<std::size_t>(f.total_degree());
        CHECK(pts.size() <= d * d);
        ++done;
    }
}
