#include "test_support.hpp"

#include "motivic/errors.hpp"
#include "motivic/rational_fn.hpp"

using namespace motivic;
using motivic::testing::L;
using motivic::testing::Lp;

namespace {

RationalFn q_fn(long k)
{
    return RationalFn::q_power(k);
}

const RationalFn one(1L);

} // namespace

TEST_CASE("normal form: primitive denominator with positive leading coefficient")
{
    // (2 - 2q) / (4 - 4q^2) = 1 / (2 (1 + q))
    const RationalFn f = RationalFn::from_polys({Rational(2), Rational(-2)}, {Integer(4), Integer(0), Integer(-4)});
    CHECK(f.denominator() == RationalFn::ZPoly{Integer(1), Integer(1)});
    CHECK(f.numerator() == RationalFn::QPoly{Rational(1, 2)});

    // 1 / (1 - q): denominator sign flipped to make the leading coefficient positive.
    const RationalFn g = one / (one - q_fn(1));
    CHECK(g.denominator() == RationalFn::ZPoly{Integer(-1), Integer(1)});
    CHECK(g.numerator() == RationalFn::QPoly{Rational(-1)});
    CHECK_THROWS_AS(RationalFn::from_polys({Rational(1)}, {}), PreconditionError);
    CHECK_THROWS_AS(one / RationalFn(), PreconditionError);
}

TEST_CASE("equality is structural after reduction")
{
    const RationalFn a = (one - q_fn(2)) / (one - q_fn(1));
    CHECK(a == one + q_fn(1));
    CHECK(a.is_denominator_one());
    const RationalFn b = (one - q_fn(3)) / (one - q_fn(2));
    CHECK(b * (one - q_fn(2)) == one - q_fn(3));
    CHECK(b - b == RationalFn());
}

TEST_CASE("conversion to LaurentPoly")
{
    CHECK(RationalFn(1 + L).to_laurent() == 1 + L);
    CHECK(RationalFn(Lp(-2) + 3).to_laurent() == Lp(-2) + 3);
    CHECK(RationalFn(Lp(-2) + 3).is_laurent());
    CHECK_FALSE((one / (one - q_fn(1))).is_laurent());
    CHECK_THROWS_AS((one / (one - q_fn(1))).to_laurent(), InvariantViolation);
    CHECK_THROWS_AS(RationalFn(Rational(1, 2)).to_laurent(), InvariantViolation);
}

TEST_CASE("substitute_power is the Adams operation q -> q^k")
{
    const RationalFn f = one / (one - q_fn(1));
    CHECK(f.substitute_power(3) == one / (one - q_fn(3)));
    CHECK(RationalFn(1 + L).substitute_power(2) == RationalFn(1 + Lp(2)));
    CHECK(RationalFn(Lp(-1)).substitute_power(2) == RationalFn(Lp(-2)));
    CHECK_THROWS_AS(f.substitute_power(0), PreconditionError);
}

TEST_CASE("field axioms and agreement with LaurentPoly arithmetic")
{
    testing::RandomLaurent gen(3);
    for (int i = 0; i < 100; ++i) {
        const LaurentPoly a = gen.poly(), b = gen.poly(), c = gen.poly();
        const RationalFn fa(a), fb(b), fc(c);
        CHECK(fa + fb == RationalFn(a + b));
        CHECK(fa * fb == RationalFn(a * b));
        CHECK((fa - fb).to_laurent() == a - b);
        if (!b.is_zero() && !c.is_zero()) {
            const RationalFn x = fa / fb, y = fc / (fb + one);
            if (!(fb + one).is_zero()) {
                CHECK(x * y == y * x);
                CHECK((x + y) * fc == x * fc + y * fc);
                CHECK((x / fc) * fc == x);
                CHECK(x - y + y == x);
            }
        }
    }
}

TEST_CASE("polynomial gcd")
{
    using Z = RationalFn::ZPoly;
    // gcd((1-q)(1+q), (1-q)(2+q)) = q - 1
    const Z a = poly::multiply({Integer(1), Integer(-1)}, {Integer(1), Integer(1)});
    const Z b = poly::multiply({Integer(1), Integer(-1)}, {Integer(2), Integer(1)});
    CHECK(poly::gcd(a, b) == Z{Integer(-1), Integer(1)});
    CHECK(poly::gcd(Z{}, Z{}).empty());
    CHECK(poly::gcd(Z{Integer(6)}, Z{Integer(4)}) == Z{Integer(1)});
    CHECK(poly::content(Z{Integer(6), Integer(-9)}) == Integer(3));
    CHECK(poly::exact_divide(a, Z{Integer(1), Integer(1)}) == Z{Integer(1), Integer(-1)});
}

TEST_CASE("to_string")
{
    CHECK(RationalFn(1 + L).to_string() == "q + 1");
    CHECK((one / (one - q_fn(1))).to_string() == "(-1)/(q - 1)");
}
