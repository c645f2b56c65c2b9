#include "test_support.hpp"

#include "motivic/errors.hpp"
#include "motivic/rational_fn.hpp"

using namespace motivic;
using motivic::testing::L;
using motivic::testing::Lp;

TEST_CASE("affine classes are powers of L")
{
    CHECK(affine_class(0) == LaurentPoly(1L));
    CHECK(affine_class(1) == L);
    CHECK(affine_class(2) == Lp(2));
    CHECK_THROWS_AS(affine_class(-1), PreconditionError);
}

TEST_CASE("projective classes from the cell decomposition")
{
    CHECK(projective_class(-1).is_zero());
    CHECK(projective_class(0) == LaurentPoly(1L));
    CHECK(projective_class(1) == 1 + L);
    CHECK(projective_class(2) == 1 + L + Lp(2));
    CHECK_THROWS_AS(projective_class(-2), PreconditionError);
}

TEST_CASE("dual inverts L")
{
    CHECK(dual(Lp(2)) == Lp(-2));
    // [P^1]^dual = L^{-1} [P^1]
    CHECK(dual(1 + L) == 1 + Lp(-1));
    CHECK(dual(1 + L) == Lp(-1) * (1 + L));
    const LaurentPoly f = LaurentPoly::monomial(Integer(3), 3) - Lp(-1);
    CHECK(dual(dual(f)) == f);
    CHECK(dual(LaurentPoly()).is_zero());
}

TEST_CASE("eval substitutes L = q exactly")
{
    CHECK(eval(1 + L, Rational(2)) == Rational(3));
    CHECK(eval(Lp(-1), Rational(2)) == Rational(1, 2));
    CHECK(eval(1 + L + Lp(2) + Lp(3), Rational(2)) == Rational(15));
    CHECK(eval(Lp(2) - 3, Rational(1, 3)) == Rational(-26, 9));
    CHECK(eval(1 + L, Rational(0)) == Rational(1));
    CHECK_THROWS_AS(eval(Lp(-1), Rational(0)), PreconditionError);
}

TEST_CASE("zero coefficients are never stored")
{
    const LaurentPoly f = (1 + L) - L;
    CHECK(f == LaurentPoly(1L));
    CHECK(f.size() == 1);
    CHECK((L - L).is_zero());
    CHECK(LaurentPoly::monomial(Integer(0), 5).is_zero());
}

TEST_CASE("big integer coefficients do not overflow")
{
    const LaurentPoly f = (1 + L).pow(80);
    CHECK(f.coefficient(40).get_str() == "107507208733336176461620");
    CHECK(eval(f, Rational(1)) == Rational(Integer("1208925819614629174706176")));
}

TEST_CASE("units of Z[L^{+-1}]")
{
    CHECK(Lp(3).is_unit());
    CHECK((-Lp(-2)).is_unit());
    CHECK_FALSE((1 + L).is_unit());
    CHECK_FALSE(LaurentPoly(2L).is_unit());
    CHECK(Lp(3).unit_inverse() == Lp(-3));
    CHECK((-Lp(-2)).unit_inverse() == -Lp(2));
}

TEST_CASE("to_string and parse_laurent round-trip")
{
    CHECK((Lp(4) + Lp(3) - 2 * Lp(-1)).to_string() == "L^4 + L^3 - 2*L^-1");
    CHECK(LaurentPoly().to_string() == "0");
    CHECK(parse_laurent("1+L+L^2") == projective_class(2));
    CHECK(parse_laurent("3*L^-1 - 2") == 3 * Lp(-1) - 2);
    CHECK(parse_laurent("L^(-2)") == Lp(-2));
    CHECK(parse_laurent("2L") == 2 * L);
    CHECK(parse_laurent(" L^2 ") == Lp(2));
    CHECK_THROWS_AS(parse_laurent("L^"), PreconditionError);
    CHECK_THROWS_AS(parse_laurent("x+1"), PreconditionError);
    CHECK_THROWS_AS(parse_laurent(""), PreconditionError);

    testing::RandomLaurent gen(11);
    for (int i = 0; i < 50; ++i) {
        const LaurentPoly f = gen.poly();
        CHECK(parse_laurent(f.to_string()) == f);
    }
}

TEST_CASE("ring axioms on random triples")
{
    testing::RandomLaurent gen(1);
    for (int i = 0; i < 200; ++i) {
        const LaurentPoly a = gen.poly(), b = gen.poly(), c = gen.poly();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * LaurentPoly(1L) == a);
        CHECK(a - a == LaurentPoly());
    }
}

TEST_CASE("dual is an involutive ring homomorphism")
{
    testing::RandomLaurent gen(2);
    for (int i = 0; i < 200; ++i) {
        const LaurentPoly f = gen.poly(), g = gen.poly();
        CHECK(dual(f * g) == dual(f) * dual(g));
        CHECK(dual(f + g) == dual(f) + dual(g));
        CHECK(dual(dual(f)) == f);
    }
}

TEST_CASE("integral and rational views")
{
    const QLaurent half = QLaurent::monomial(Rational(1, 2), 1);
    CHECK_THROWS_AS(to_integral(half), InvariantViolation);
    CHECK(to_integral(to_rational(1 + L)) == 1 + L);
    CHECK(to_integral(half * Rational(4)) == 2 * L);
}
