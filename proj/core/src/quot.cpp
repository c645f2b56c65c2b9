#include "motivic/quot.hpp"

#include "motivic/plethystic.hpp"
#include "motivic/quiver.hpp"

namespace motivic {

namespace {

void check_rank(int r)
{
    require(r >= 0, "rank must be non-negative");
}

// c * t / (1 - L^k t) = sum_{j>=0} c L^{kj} t^{j+1}.
MotiveSeries geometric_tail(const LaurentPoly& c, int k, int order)
{
    MotiveSeries out(1, order);
    for (int j = 0; j + 1 <= order; ++j) {
        out.add_term({j + 1}, c.shifted(static_cast<LaurentPoly::Exponent>(k) * j));
    }
    return out;
}

} // namespace

MotiveSeries punctual_log(int r, int d, int order)
{
    check_rank(r);
    const LaurentPoly pr = projective_class(r - 1);
    switch (d) {
    case 1:
        return MotiveSeries::monomial(pr, {1}, order);
    case 2:
        return geometric_tail(pr, r, order);
    default:
        throw UnsupportedDimension(d);
    }
}

MotiveSeries punctual_quot_series(int r, int d, int order)
{
    return exp_pleth(punctual_log(r, d, order));
}

MotiveSeries quot_series(const LaurentPoly& x_class, int d, int r, int order)
{
    const MotiveSeries log = punctual_log(r, d, order);
    const MotiveSeries via_exp = exp_pleth(log * x_class);
    const MotiveSeries via_power = power_structure(exp_pleth(log), x_class);
    if (auto diff = first_difference(via_exp, via_power)) {
        throw InvariantViolation("quot_series: power structure and Exp disagree at " +
                                 monomial_label(*diff) + ": " + via_power.coefficient(*diff).to_string() +
                                 " vs " + via_exp.coefficient(*diff).to_string());
    }
    return via_exp;
}

MotiveSeries nakajima_closed_M_series(int r, int order)
{
    check_rank(r);
    return exp_pleth(geometric_tail(projective_class(r - 1).shifted(r + 1), r, order));
}

MotiveSeries nakajima_closed_L_series(int r, int order)
{
    check_rank(r);
    return exp_pleth(geometric_tail(projective_class(r - 1), r, order));
}

MotiveSeries nakajima_L_product(int r, int order)
{
    check_rank(r);
    auto out = MotiveSeries::one(1, order);
    for (int i = 1; i <= r; ++i) {
        for (int j = 1; j <= order; ++j) {
            out *= geometric_power(LaurentPoly::monomial(Integer(1), r * j - i), {j}, Integer(1), order);
        }
    }
    return out;
}

MotiveSeries quot_affine_plane_series(int r, int order)
{
    check_rank(r);
    return exp_pleth(geometric_tail(projective_class(r - 1).shifted(2), r, order));
}

IdentityReport verify_product_vs_exp(int r, int order)
{
    auto report = compare_series("product-vs-exp", nakajima_L_product(r, order),
                                 nakajima_closed_L_series(r, order));
    report.detail = "r=" + std::to_string(r) + " order=" + std::to_string(order);
    return report;
}

IdentityReport verify_duality(int r, int n_max)
{
    require(r >= 1, "verify_duality: rank must be positive");
    require(n_max >= 0, "verify_duality: n_max must be non-negative");
    IdentityReport report;
    report.identity = "duality";
    report.detail = "r=" + std::to_string(r) + " nmax=" + std::to_string(n_max);

    const auto check = [&](const std::string& what, int n, const LaurentPoly& lhs, const LaurentPoly& rhs) {
        ++report.checks;
        if (lhs != rhs && report.passed) {
            report.passed = false;
            report.first_mismatch = Mismatch{what + " t^" + std::to_string(n), lhs.to_string(), rhs.to_string()};
        }
    };

    const auto l2 = nakajima_closed_L_series(r, n_max);
    const auto m2 = nakajima_closed_M_series(r, n_max);
    const auto l1 = punctual_quot_series(r, 1, n_max);
    const auto m1 = quot_series(affine_class(1), 1, r, n_max);
    for (int n = 0; n <= n_max; ++n) {
        check("d=2", n, dual(l2.coefficient(n)), m2.coefficient(n).shifted(-2L * r * n));
        check("d=1", n, dual(l1.coefficient(n)), m1.coefficient(n).shifted(-1L * r * n));
    }
    return report;
}

IdentityReport verify_class1_vs_closed(int r, int order)
{
    require(r >= 0, "verify_class1_vs_closed: rank must be non-negative");
    const Quiver jordan = Quiver::jordan();
    const DimVector w{r};
    const auto m_partition = nakajima_motive_series(jordan, w, order);
    auto report = compare_series("class1-vs-closed", m_partition, nakajima_closed_M_series(r, order));
    report.absorb(compare_series("class1-vs-closed", nilpotent_from_motive(jordan, w, m_partition),
                                 nakajima_closed_L_series(r, order)));
    report.detail = "r=" + std::to_string(r) + " order=" + std::to_string(order);
    return report;
}

IdentityReport verify_gottsche(const LaurentPoly& x_class, int order)
{
    auto rhs = exp_pleth(geometric_tail(x_class, 1, order));
    auto report = compare_series("gottsche", quot_series(x_class, 2, 1, order), rhs);
    report.detail = "X=" + x_class.to_string() + " order=" + std::to_string(order);
    return report;
}

AffinePlaneComparison compare_affine_plane_with_nakajima(int r, int order)
{
    AffinePlaneComparison out{quot_affine_plane_series(r, order), nakajima_closed_M_series(r, order), {}};
    for (int n = 0; n <= order; ++n) {
        if (out.quot_a2.coefficient(n) != out.nakajima.coefficient(n)) {
            out.first_difference = n;
            break;
        }
    }
    return out;
}

} // namespace motivic
