#include "motivic/specialization.hpp"

#include <sstream>

#include "motivic/plethystic.hpp"
#include "motivic/quot.hpp"

namespace motivic {

namespace {

Integer power(const Integer& base, unsigned long e)
{
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

Integer eval_polynomial(const LaurentPoly& f, const Integer& q)
{
    require(f.is_polynomial(), "point count requested for class with negative powers of L: " + f.to_string());
    Integer out = 0;
    for (const auto& [e, c] : f.terms()) {
        out += c * power(q, static_cast<unsigned long>(e));
    }
    return out;
}

void check_field_size(const Integer& q)
{
    require(q >= 1, "field size must be a positive integer");
}

RationalSeries counts_as_series(const std::vector<Integer>& counts, int order)
{
    RationalSeries out(1, order);
    for (std::size_t n = 0; n < counts.size() && static_cast<int>(n) <= order; ++n) {
        out.add_term({static_cast<int>(n)}, Rational(counts[n]));
    }
    return out;
}

} // namespace

std::vector<Integer> point_count_series(const TruncatedSeries<LaurentPoly>& s, const Integer& q)
{
    require(s.arity() == 1, "point_count_series: univariate series required");
    check_field_size(q);
    std::vector<Integer> out;
    out.reserve(static_cast<std::size_t>(s.order()) + 1);
    for (int n = 0; n <= s.order(); ++n) {
        out.push_back(eval_polynomial(s.coefficient(n), q));
    }
    return out;
}

RationalSeries zeta_series_from_counts(const LaurentPoly& x_class, const Integer& q, int order)
{
    check_field_size(q);
    RationalSeries sum(1, order);
    for (int n = 1; n <= order; ++n) {
        Rational term(eval_polynomial(x_class, power(q, static_cast<unsigned long>(n))), Integer(n));
        term.canonicalize();
        sum.add_term({n}, term);
    }
    return exp_series(sum);
}

RationalSeries zeta_series(const LaurentPoly& x_class, const Integer& q, int order)
{
    check_field_size(q);
    require(x_class.is_polynomial(), "zeta_series: class must be a polynomial in L");
    auto product = RationalSeries::one(1, order);
    for (const auto& [k, a] : x_class.terms()) {
        if (order >= 1) {
            product *= geometric_power(Rational(power(q, static_cast<unsigned long>(k))), {1}, a, order);
        }
    }
    const auto definitional = zeta_series_from_counts(x_class, q, order);
    if (auto diff = first_difference(product, definitional)) {
        throw InvariantViolation("zeta_series: product and exp forms disagree at " + monomial_label(*diff));
    }
    return product;
}

IdentityReport verify_zeta_product_curve(const LaurentPoly& x_class, int r, const Integer& q, int order)
{
    require(r >= 0, "verify_zeta_product_curve: rank must be non-negative");
    const auto lhs = counts_as_series(point_count_series(quot_series(x_class, 1, r, order), q), order);
    const auto zeta = zeta_series(x_class, q, order);
    auto rhs = RationalSeries::one(1, order);
    for (int i = 0; i < r; ++i) {
        rhs *= scale_variable(zeta, Rational(power(q, static_cast<unsigned long>(i))));
    }
    auto report = compare_series("zeta-curve", lhs, rhs);
    report.detail = "X=" + x_class.to_string() + " r=" + std::to_string(r) + " q=" + q.get_str() +
                    " order=" + std::to_string(order);
    return report;
}

IdentityReport verify_zeta_product_surface(const LaurentPoly& x_class, int r, const Integer& q, int order)
{
    require(r >= 0, "verify_zeta_product_surface: rank must be non-negative");
    const auto lhs = counts_as_series(point_count_series(quot_series(x_class, 2, r, order), q), order);
    const auto zeta = zeta_series(x_class, q, order);
    auto rhs = RationalSeries::one(1, order);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j + 1 <= order; ++j) {
            const auto shift = static_cast<unsigned long>(i + r * j);
            rhs *= substitute_power(scale_variable(zeta, Rational(power(q, shift))), j + 1);
        }
    }
    auto report = compare_series("zeta-surface", lhs, rhs);
    report.detail = "X=" + x_class.to_string() + " r=" + std::to_string(r) + " q=" + q.get_str() +
                    " order=" + std::to_string(order);
    return report;
}

PoincarePolynomial poincare_poly(const LaurentPoly& f)
{
    return PoincarePolynomial{f};
}

std::string count_table_csv(const std::vector<Integer>& counts)
{
    std::ostringstream out;
    out << "# format: motivic-count-table/1\n";
    out << "n,count\n";
    for (std::size_t n = 0; n < counts.size(); ++n) {
        out << n << ',' << counts[n].get_str() << '\n';
    }
    return out.str();
}

} // namespace motivic
