#pragma once

#include <optional>

#include "motivic/laurent.hpp"
#include "motivic/report.hpp"
#include "motivic/series.hpp"

namespace motivic {

using MotiveSeries = TruncatedSeries<LaurentPoly>;

/// Log of the punctual series: [P^{r-1}] t for curves (d = 1) and
/// [P^{r-1}] t / (1 - L^r t) for surfaces (d = 2). Throws UnsupportedDimension
/// for any other d.
MotiveSeries punctual_log(int r, int d, int order);

/// sum_n [Quot(O^r_{A^d}, n)_0] t^n = Exp(punctual_log(r, d)).
MotiveSeries punctual_quot_series(int r, int d, int order);

/// sum_n [Quot(E, n)] t^n for a rank-r bundle E on a d-dimensional X with
/// class x_class. Computed twice, as (punctual series)^{[X]} through the power
/// structure and as Exp([X] * punctual_log); the two must agree
/// (InvariantViolation otherwise).
MotiveSeries quot_series(const LaurentPoly& x_class, int d, int r, int order);

/// sum_n [M(n, r)] t^n = Exp([P^{r-1}] L^{r+1} t / (1 - L^r t)) for the Jordan quiver.
MotiveSeries nakajima_closed_M_series(int r, int order);

/// sum_n [L(n, r)] t^n = Exp([P^{r-1}] t / (1 - L^r t)).
MotiveSeries nakajima_closed_L_series(int r, int order);

/// prod_{i=1}^{r} prod_{j>=1} (1 - L^{rj-i} t^j)^{-1}.
MotiveSeries nakajima_L_product(int r, int order);

/// sum_n [M^2(n, r)] t^n = [Quot(O^r_{A^2}, n)] = Exp([P^{r-1}] L^2 t / (1 - L^r t)).
MotiveSeries quot_affine_plane_series(int r, int order);

/// Product form equals Exp form for [L(n, r)].
IdentityReport verify_product_vs_exp(int r, int order);

/// [L(n,r)]^dual = L^{-2rn} [M(n,r)] and [L^1(n,r)]^dual = L^{-rn} [M^1(n,r)]
/// for n <= n_max.
IdentityReport verify_duality(int r, int n_max);

/// Jordan-quiver partition sum reproduces the closed M- and L-series.
IdentityReport verify_class1_vs_closed(int r, int order);

/// Surface series at r = 1 equals Exp([X] t / (1 - L t)).
IdentityReport verify_gottsche(const LaurentPoly& x_class, int order);

/// Comparison of [M^2(n, r)] (Quot on A^2) with [M(n, r)] (Jordan quiver).
struct AffinePlaneComparison {
    MotiveSeries quot_a2;
    MotiveSeries nakajima;
    /// Smallest n with differing coefficients, if any.
    std::optional<int> first_difference;
};

AffinePlaneComparison compare_affine_plane_with_nakajima(int r, int order);

} // namespace motivic
