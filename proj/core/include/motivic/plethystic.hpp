#pragma once

#include "motivic/laurent.hpp"
#include "motivic/series.hpp"

namespace motivic {

/// Moebius function mu(n) for n >= 1.
int moebius(int n);

/// Generalized binomial coefficient c(c+1)...(c+j-1)/j!, i.e. the coefficient
/// of m^j in (1-m)^{-c}. Valid for any integer c.
Integer rising_binomial(const Integer& c, int j);

/// Plethystic exponential, computed as exp(sum_{k>=1} psi_k(f)/k) over the
/// rational completion of C and lowered back with an integrality check.
///
/// f must have zero constant term. For C = LaurentPoly a non-integral result
/// throws InvariantViolation: Exp maps Z[L^{+-1}]-series to Z[L^{+-1}]-series,
/// so that can only come from a bug.
template <class C>
TruncatedSeries<C> exp_pleth(const TruncatedSeries<C>& f)
{
    using Traits = CoefficientTraits<C>;
    using D = typename Traits::Completion;
    require(Traits::is_zero(f.constant_term()), "exp_pleth: constant term must vanish");
    const auto lifted = lift(f);
    TruncatedSeries<D> sum(f.arity(), f.order());
    for (int k = 1; k <= f.order(); ++k) {
        auto term = adams(lifted, k);
        sum += term * CoefficientTraits<D>::scale(D(1L), Rational(1, k));
    }
    return lower<C>(exp_series(sum));
}

/// Inverse of exp_pleth on series with constant term 1:
/// Log(g) = sum_k mu(k)/k psi_k(log g).
template <class C>
TruncatedSeries<C> log_pleth(const TruncatedSeries<C>& g)
{
    using Traits = CoefficientTraits<C>;
    using D = typename Traits::Completion;
    require(g.constant_term() == C(1L), "log_pleth: constant term must be 1");
    const auto log_g = log_series(lift(g));
    TruncatedSeries<D> out(g.arity(), g.order());
    for (int k = 1; k <= g.order(); ++k) {
        const int mu = moebius(k);
        if (mu == 0) {
            continue;
        }
        out += adams(log_g, k) * CoefficientTraits<D>::scale(D(1L), Rational(mu, k));
    }
    return lower<C>(out);
}

/// Exp via the product formula prod_v prod_e (1 - L^e z^v)^{-c_{v,e}}, where
/// f = sum_v (sum_e c_{v,e} L^e) z^v. Integer arithmetic only; kept as an
/// evaluation path independent of the Adams/exp route.
TruncatedSeries<LaurentPoly> exp_pleth_product(const TruncatedSeries<LaurentPoly>& f);

/// (1 - c*z^e)^{-k} truncated at `order`, for a monomial c*z^e of positive degree.
template <class C>
TruncatedSeries<C> geometric_power(const C& c, const Exponents& e, const Integer& k, int order)
{
    require(total_degree(e) > 0, "geometric_power: monomial must have positive degree");
    TruncatedSeries<C> out = TruncatedSeries<C>::one(e.size(), order);
    C power(1L);
    Exponents ej(e.size(), 0);
    for (int j = 1; total_degree(e) * j <= order; ++j) {
        power = power * c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            ej[i] = e[i] * j;
        }
        const Integer b = rising_binomial(k, j);
        if (b != 0) {
            out.add_term(ej, power * CoefficientTraits<C>::from_integer(b));
        }
    }
    return out;
}

/// Power structure f^a = Exp(a * Log f), for f with constant term 1 and any
/// class a in Z[L^{+-1}].
TruncatedSeries<LaurentPoly> power_structure(const TruncatedSeries<LaurentPoly>& f,
                                             const LaurentPoly& a);

/// sigma_k(x) = [S^k X] when x = [X]: the t^k coefficient of Exp(x t).
LaurentPoly symmetric_power(const LaurentPoly& x, int k);

} // namespace motivic
