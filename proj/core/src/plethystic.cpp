#include "motivic/plethystic.hpp"

namespace motivic {

int moebius(int n)
{
    require(n >= 1, "moebius: n must be positive");
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) {
                return 0;
            }
            result = -result;
        }
    }
    if (n > 1) {
        result = -result;
    }
    return result;
}

Integer rising_binomial(const Integer& c, int j)
{
    require(j >= 0, "rising_binomial: j must be non-negative");
    Integer num = 1;
    Integer den = 1;
    for (int i = 0; i < j; ++i) {
        num *= c + i;
        den *= i + 1;
    }
    Integer out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

TruncatedSeries<LaurentPoly> exp_pleth_product(const TruncatedSeries<LaurentPoly>& f)
{
    require(f.constant_term().is_zero(), "exp_pleth_product: constant term must vanish");
    auto out = TruncatedSeries<LaurentPoly>::one(f.arity(), f.order());
    f.for_each_term([&](const Exponents& v, const LaurentPoly& c) {
        for (const auto& [e, count] : c.terms()) {
            out *= geometric_power(LaurentPoly::monomial(Integer(1), e), v, count, f.order());
        }
    });
    return out;
}

TruncatedSeries<LaurentPoly> power_structure(const TruncatedSeries<LaurentPoly>& f,
                                             const LaurentPoly& a)
{
    require(f.constant_term() == LaurentPoly(1L), "power_structure: constant term must be 1");
    return exp_pleth(log_pleth(f) * a);
}

LaurentPoly symmetric_power(const LaurentPoly& x, int k)
{
    require(k >= 0, "symmetric_power: k must be non-negative");
    if (k == 0) {
        return LaurentPoly(1L);
    }
    auto f = TruncatedSeries<LaurentPoly>::monomial(x, {1}, k);
    return exp_pleth(f).coefficient(k);
}

} // namespace motivic
