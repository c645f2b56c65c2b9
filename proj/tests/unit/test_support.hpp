#pragma once

#include <random>

#include <doctest.h>

#include "motivic/laurent.hpp"
#include "motivic/series.hpp"

namespace motivic::testing {

inline const LaurentPoly L = LaurentPoly::monomial(Integer(1), 1);

inline LaurentPoly Lp(int e)
{
    return LaurentPoly::monomial(Integer(1), e);
}

/// Univariate series from a coefficient list starting at t^0.
inline TruncatedSeries<LaurentPoly> series_of(std::initializer_list<LaurentPoly> coefficients, int order)
{
    return TruncatedSeries<LaurentPoly>::from_coefficients(std::vector<LaurentPoly>(coefficients), order);
}

/// Small random Laurent polynomials for property tests.
class RandomLaurent {
public:
    explicit RandomLaurent(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    LaurentPoly poly(int max_terms = 4, int max_coeff = 5, int max_exp = 4)
    {
        LaurentPoly out;
        const int terms = uniform(0, max_terms);
        for (int i = 0; i < terms; ++i) {
            out += LaurentPoly::monomial(Integer(uniform(-max_coeff, max_coeff)), uniform(-max_exp, max_exp));
        }
        return out;
    }

    TruncatedSeries<LaurentPoly> series(int order, bool constant_one)
    {
        TruncatedSeries<LaurentPoly> out(1, order);
        if (constant_one) {
            out.add_term({0}, LaurentPoly(1L));
        }
        for (int n = 1; n <= order; ++n) {
            out.add_term({n}, poly(2, 2, 2));
        }
        return out;
    }

private:
    std::mt19937_64 rng_;
};

} // namespace motivic::testing

namespace doctest {
template <>
struct StringMaker<motivic::LaurentPoly> {
    static String convert(const motivic::LaurentPoly& f) { return f.to_string().c_str(); }
};
} // namespace doctest
