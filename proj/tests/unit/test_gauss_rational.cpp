#include <doctest.h>

#include "gridzero/gauss_rational.hpp"
#include "support/oracles.hpp"

using namespace gridzero;
using gridzero::testing::Rng;

TEST_CASE("basic arithmetic and canonical form") {
    GaussRational a = GaussRational::from_fraction(1, 3);
    GaussRational b = GaussRational::from_fraction(2, 6);
    CHECK(a == b);
    CHECK((a + b).re() == mpq_class(2, 3));
    CHECK((a - b).is_zero());

    GaussRational i = GaussRational::unit_i();
    CHECK((i * i) == GaussRational(-1));
    CHECK((i * i * i * i).is_one());
}

TEST_CASE("division is exact inverse of multiplication") {
    Rng rng(11);
    for (int k = 0; k < 200; ++k) {
        GaussRational a = rng.rational(9, 4, 50);
        GaussRational b = rng.nonzero_rational(9, 4);
        CHECK((a * b) / b == a);
        CHECK(b * inverse(b) == GaussRational(1));
    }
}

TEST_CASE("field axioms on random triples") {
    Rng rng(12);
    for (int k = 0; k < 100; ++k) {
        GaussRational a = rng.rational(7, 3, 50);
        GaussRational b = rng.rational(7, 3, 50);
        GaussRational c = rng.rational(7, 3, 50);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("norm and conjugate") {
    GaussRational z(mpq_class(3), mpq_class(4));
    CHECK(z.norm() == 25);
    CHECK((z * z.conj()).re() == 25);
    CHECK((z * z.conj()).is_real());
}

TEST_CASE("text form") {
    CHECK(GaussRational(0).str() == "0");
    CHECK(GaussRational::from_fraction(-1, 2).str() == "-1/2");
    CHECK(GaussRational::unit_i().str() == "i");
    CHECK((-GaussRational::unit_i()).str() == "-i");
    CHECK(GaussRational(mpq_class(1, 2), mpq_class(2, 3)).str() == "1/2+2/3*i");
    CHECK(GaussRational(mpq_class(1), mpq_class(-3)).str() == "1-3*i");
}
