#include "test_support.hpp"

#include "motivic/errors.hpp"
#include "motivic/rational_fn.hpp"

using namespace motivic;
using motivic::testing::L;
using motivic::testing::Lp;
using motivic::testing::series_of;
using Series = TruncatedSeries<LaurentPoly>;

namespace {

Series geometric(int order)
{
    std::vector<LaurentPoly> c(static_cast<std::size_t>(order) + 1, LaurentPoly(1L));
    return Series::from_coefficients(c, order);
}

} // namespace

TEST_CASE("Cauchy product truncates")
{
    CHECK(series_of({1, 1}, 5) * series_of({1, -1}, 5) == series_of({1, 0, -1}, 5));
    CHECK(geometric(8) * series_of({1, -1}, 8) == Series::one(1, 8));
    const Series a = series_of({1, L}, 3);
    CHECK(a * a == series_of({1, 2 * L, Lp(2)}, 3));
    CHECK((a * a).order() == 3);
}

TEST_CASE("orders downgrade to the minimum")
{
    const Series a = geometric(10);
    const Series b = geometric(4);
    CHECK((a + b).order() == 4);
    CHECK((a * b).order() == 4);
    CHECK(a == geometric(4)); // equality up to the common order
    CHECK(a.truncated(2).term_count() == 3);
}

TEST_CASE("terms beyond the order are dropped")
{
    Series s(1, 2);
    s.add_term({3}, L);
    CHECK(s.term_count() == 0);
    CHECK_THROWS_AS(s.add_term({-1}, L), PreconditionError);
}

TEST_CASE("mismatched arity is rejected")
{
    const Series a(1, 3);
    const Series b(2, 3);
    CHECK_THROWS_AS(a + b, PreconditionError);
    CHECK_THROWS_AS(a * b, PreconditionError);
}

TEST_CASE("inversion")
{
    CHECK(invert(series_of({1, -1}, 7)) == geometric(7));
    CHECK(invert(series_of({1, -L}, 4)) == series_of({1, L, Lp(2), Lp(3), Lp(4)}, 4));
    const Series p = series_of({1, 1, 1}, 10);
    CHECK(invert(invert(p)) == p);
    // unit constant term -L^2
    const Series u = series_of({-Lp(2), 1}, 3);
    CHECK(u * invert(u) == Series::one(1, 3));
    CHECK_THROWS_AS(invert(series_of({2, 1}, 3)), PreconditionError);
    CHECK_THROWS_AS(invert(series_of({1 + L, 1}, 3)), PreconditionError);
}

TEST_CASE("substitute_power scales exponents")
{
    CHECK(substitute_power(series_of({0, 1, 1}, 6), 2) == series_of({0, 0, 1, 0, 1}, 6));
    const Series a = series_of({1, L, 3}, 5);
    CHECK(substitute_power(a, 1) == a);
    CHECK(substitute_power(geometric(9), 3) == series_of({1, 0, 0, 1, 0, 0, 1, 0, 0, 1}, 9));
    CHECK(substitute_power(a, 2).order() == 5);
    CHECK_THROWS_AS(substitute_power(a, 0), PreconditionError);
}

TEST_CASE("adams acts on L and the series variable")
{
    CHECK(adams(series_of({0, L}, 4), 2) == series_of({0, 0, Lp(2)}, 4));
    CHECK(adams(series_of({0, 1 + L}, 4), 3) == series_of({0, 0, 0, 1 + Lp(3)}, 4));
    const Series a = series_of({1, L, 2 - Lp(-1)}, 6);
    CHECK(adams(a, 1) == a);
}

TEST_CASE("multivariate series are graded by total degree")
{
    TruncatedSeries<LaurentPoly> z(2, 2);
    z.add_term({1, 0}, LaurentPoly(1L));
    z.add_term({0, 1}, L);
    z.add_term({2, 1}, L); // total degree 3 > 2: dropped
    CHECK(z.term_count() == 2);
    const auto sq = z * z;
    CHECK(sq.coefficient({1, 1}) == 2 * L);
    CHECK(sq.coefficient({0, 2}) == Lp(2));
    CHECK(adams(z, 2).coefficient({0, 2}) == Lp(2));
}

TEST_CASE("property: adams composes multiplicatively")
{
    testing::RandomLaurent gen(4);
    for (int i = 0; i < 40; ++i) {
        const Series a = gen.series(12, false);
        for (int k : {1, 2, 3}) {
            for (int m : {1, 2, 4}) {
                CHECK(adams(adams(a, k), m) == adams(a, k * m));
            }
        }
    }
}

TEST_CASE("property: substitute_power commutes with products")
{
    testing::RandomLaurent gen(5);
    for (int i = 0; i < 40; ++i) {
        const Series a = gen.series(10, true), b = gen.series(10, false);
        for (int k : {2, 3}) {
            CHECK(substitute_power(a * b, k) == substitute_power(a, k) * substitute_power(b, k));
        }
    }
}

TEST_CASE("property: inversion is two-sided")
{
    testing::RandomLaurent gen(6);
    for (int i = 0; i < 40; ++i) {
        const Series a = gen.series(9, true);
        const Series inv = invert(a);
        CHECK(a * inv == Series::one(1, 9));
        CHECK(inv * a == Series::one(1, 9));
    }
}

TEST_CASE("exp and log over the rationals are inverse")
{
    using QSeries = TruncatedSeries<Rational>;
    QSeries h(1, 8);
    h.add_term({1}, Rational(1));
    const QSeries e = exp_series(h);
    CHECK(e.coefficient(3) == Rational(1, 6));
    CHECK(log_series(e) == h);
    CHECK_FALSE(first_difference(log_series(e), h).has_value());
}

TEST_CASE("series over RationalFn")
{
    using RSeries = TruncatedSeries<RationalFn>;
    const RationalFn q = RationalFn::q_power(1);
    RSeries a = RSeries::one(1, 5);
    a.add_term({1}, -q);
    const RSeries inv = invert(a);
    CHECK(inv.coefficient(4) == q * q * q * q);
    CHECK(adams(inv, 2).coefficient(2) == q * q);
}
