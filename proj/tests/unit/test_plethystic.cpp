#include "test_support.hpp"

#include "motivic/errors.hpp"
#include "motivic/plethystic.hpp"
#include "motivic/power_axioms.hpp"

using namespace motivic;
using motivic::testing::L;
using motivic::testing::Lp;
using motivic::testing::series_of;
using Series = TruncatedSeries<LaurentPoly>;

namespace {

Series geometric(const LaurentPoly& ratio, int order)
{
    Series out(1, order);
    LaurentPoly p(1L);
    for (int n = 0; n <= order; ++n) {
        out.add_term({n}, p);
        p = p * ratio;
    }
    return out;
}

} // namespace

TEST_CASE("moebius and rising binomials")
{
    CHECK(moebius(1) == 1);
    CHECK(moebius(2) == -1);
    CHECK(moebius(4) == 0);
    CHECK(moebius(6) == 1);
    CHECK(moebius(30) == -1);
    CHECK(rising_binomial(Integer(3), 2) == 6);   // (1-m)^{-3}: 1, 3, 6, 10
    CHECK(rising_binomial(Integer(-2), 1) == -2); // (1-m)^2 = 1 - 2m + m^2
    CHECK(rising_binomial(Integer(-2), 2) == 1);
    CHECK(rising_binomial(Integer(-2), 3) == 0);
    CHECK(rising_binomial(Integer(5), 0) == 1);
}

TEST_CASE("Exp of monomials is geometric")
{
    CHECK(exp_pleth(series_of({0, 1}, 10)) == geometric(LaurentPoly(1L), 10));
    CHECK(exp_pleth(series_of({0, L}, 8)) == geometric(L, 8));
    CHECK_THROWS_AS(exp_pleth(series_of({1, 1}, 3)), PreconditionError);
}

TEST_CASE("Exp((1+L)t) gives projective spaces")
{
    // frozen from 1/((1-t)(1-Lt))
    const Series e = exp_pleth(series_of({0, 1 + L}, 3));
    CHECK(e.coefficient(2) == 1 + L + Lp(2));
    CHECK(e.coefficient(3) == projective_class(3));
}

TEST_CASE("Log inverts Exp")
{
    CHECK(log_pleth(geometric(LaurentPoly(1L), 9)) == series_of({0, 1}, 9));
    Series f(1, 10);
    f.add_term({1}, L);
    f.add_term({3}, LaurentPoly(1L));
    CHECK(log_pleth(exp_pleth(f)) == f);
    // 1/((1-t)(1-t^2))
    const Series g = geometric(LaurentPoly(1L), 8) * substitute_power(geometric(LaurentPoly(1L), 8), 2);
    CHECK(log_pleth(g) == series_of({0, 1, 1}, 8));
    CHECK_THROWS_AS(log_pleth(series_of({2, 1}, 3)), PreconditionError);
}

TEST_CASE("power structure examples")
{
    // (1 - t)^{-L} = 1/(1 - L t)
    CHECK(power_structure(geometric(LaurentPoly(1L), 7), L) == geometric(L, 7));
    // (1 + t)^a = 1 + a t + O(t^2)
    const LaurentPoly a = 2 * Lp(3) - Lp(-1);
    const Series p = power_structure(series_of({1, 1}, 4), a);
    CHECK(p.coefficient(1) == a);
    testing::RandomLaurent gen(7);
    for (int i = 0; i < 10; ++i) {
        CHECK(power_structure(gen.series(6, true), LaurentPoly()) == Series::one(1, 6));
    }
    CHECK_THROWS_AS(power_structure(series_of({0, 1}, 3), L), PreconditionError);
}

TEST_CASE("symmetric powers")
{
    CHECK(symmetric_power(1 + L, 3) == 1 + L + Lp(2) + Lp(3));
    CHECK(symmetric_power(3 * Lp(5) - 7, 0) == LaurentPoly(1L));
    CHECK(symmetric_power(Lp(2), 1) == Lp(2));
    CHECK(symmetric_power(Lp(2), 2) == Lp(4));
    // S^2 of the affine plane: L^4 + L^3 is Hilb^2, S^2 A^2 itself is L^4.
    CHECK(symmetric_power(LaurentPoly(2L), 2) == LaurentPoly(3L));
    // sigma_k(-1) = 0 for k >= 2 since Exp(-t) = 1 - t.
    CHECK(symmetric_power(LaurentPoly(-1L), 2).is_zero());
}

TEST_CASE("property: Exp is a homomorphism and commutes with t -> t^n")
{
    testing::RandomLaurent gen(8);
    for (int i = 0; i < 25; ++i) {
        const Series f = gen.series(8, false), g = gen.series(8, false);
        CHECK(exp_pleth(f + g) == exp_pleth(f) * exp_pleth(g));
        for (int n : {2, 3}) {
            CHECK(exp_pleth(substitute_power(f, n)) == substitute_power(exp_pleth(f), n));
        }
    }
}

TEST_CASE("property: Adams and product evaluations of Exp agree")
{
    testing::RandomLaurent gen(9);
    for (int i = 0; i < 25; ++i) {
        const Series f = gen.series(8, false);
        CHECK(exp_pleth(f) == exp_pleth_product(f));
    }
}

TEST_CASE("Exp is integral on multivariate series")
{
    TruncatedSeries<LaurentPoly> f(2, 5);
    f.add_term({1, 0}, 1 + L);
    f.add_term({0, 1}, -Lp(-1));
    f.add_term({1, 1}, 3 * Lp(2));
    CHECK(exp_pleth(f) == exp_pleth_product(f));
    CHECK(log_pleth(exp_pleth(f)) == f);
}

TEST_CASE("power-structure axiom suite")
{
    const auto report = verify_power_axioms({10, 6, 99});
    CHECK(report.passed);
    CHECK(report.checks > 0);
    CHECK_THROWS_AS(verify_power_axioms({0, 6, 1}), PreconditionError);
}
