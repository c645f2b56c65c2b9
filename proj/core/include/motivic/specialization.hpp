#pragma once

#include <string>
#include <vector>

#include "motivic/laurent.hpp"
#include "motivic/report.hpp"
#include "motivic/series.hpp"

namespace motivic {

using RationalSeries = TruncatedSeries<Rational>;

/// Substitutes L = q in every coefficient of a univariate motive series.
/// Coefficients must be polynomials in L.
std::vector<Integer> point_count_series(const TruncatedSeries<LaurentPoly>& s, const Integer& q);

/// Z(X; t) = prod_k (1 - q^k t)^{-a_k} for [X] = sum_k a_k L^k.
///
/// The definitional form exp(sum_n #X(F_{q^n}) t^n / n) is evaluated as well
/// and must agree (InvariantViolation otherwise).
RationalSeries zeta_series(const LaurentPoly& x_class, const Integer& q, int order);

/// exp(sum_{n>=1} x_class(q^n) t^n / n), exposed for cross-checks.
RationalSeries zeta_series_from_counts(const LaurentPoly& x_class, const Integer& q, int order);

/// Curve case: sum_n #Quot(E, n) t^n = prod_{i<r} Z(X; q^i t).
IdentityReport verify_zeta_product_curve(const LaurentPoly& x_class, int r, const Integer& q, int order);

/// Surface case: sum_n #Quot(E, n) t^n = prod_{i<r} prod_{j>=0} Z(X; q^{i+rj} t^{j+1}).
IdentityReport verify_zeta_product_surface(const LaurentPoly& x_class, int r, const Integer& q, int order);

/// Virtual Poincare polynomial of an L-polynomial class, in the variable t.
struct PoincarePolynomial {
    LaurentPoly coefficients;

    std::string to_string() const { return coefficients.to_string("t"); }
    friend bool operator==(const PoincarePolynomial&, const PoincarePolynomial&) = default;
};

/// For classes in Z[L^{+-1}], P(f; t) is f with L renamed to t.
PoincarePolynomial poincare_poly(const LaurentPoly& f);

/// Rows "n,count" for a fixed (X, r, q), preceded by a format comment line.
std::string count_table_csv(const std::vector<Integer>& counts);

} // namespace motivic
