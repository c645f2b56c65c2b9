#include "motivic/power_axioms.hpp"

#include <random>

#include "motivic/plethystic.hpp"

namespace motivic {

namespace {

using Series = TruncatedSeries<LaurentPoly>;

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    // Up to three terms, coefficients in [-2, 2], exponents in [-2, 2].
    LaurentPoly laurent()
    {
        LaurentPoly out;
        const int terms = uniform(1, 3);
        for (int i = 0; i < terms; ++i) {
            out += LaurentPoly::monomial(Integer(uniform(-2, 2)), uniform(-2, 2));
        }
        return out;
    }

    // Zero constant term, every degree 1..order populated with probability 1/2.
    Series additive(int order)
    {
        Series out(1, order);
        for (int n = 1; n <= order; ++n) {
            if (uniform(0, 1) == 1) {
                out.add_term({n}, laurent());
            }
        }
        return out;
    }

    Series multiplicative(int order) { return Series::one(1, order) + additive(order); }

private:
    std::mt19937_64 rng_;
};

class Checker {
public:
    explicit Checker(IdentityReport& report) : report_(report) {}

    void check(const std::string& axiom, const Series& lhs, const Series& rhs, int sample)
    {
        auto r = compare_series(axiom, lhs, rhs);
        if (!r.passed && report_.passed) {
            report_.detail = axiom + " failed on sample " + std::to_string(sample);
        }
        report_.absorb(r);
    }

private:
    IdentityReport& report_;
};

} // namespace

IdentityReport verify_power_axioms(const PowerAxiomOptions& options)
{
    require(options.samples >= 1, "verify_power_axioms: need at least one sample");
    require(options.order >= 2, "verify_power_axioms: order must be at least 2");
    const int order = options.order;
    IdentityReport report;
    report.identity = "power-axioms";
    Checker checker(report);
    Sampler sampler(options.seed);
    const Series one = Series::one(1, order);

    for (int s = 0; s < options.samples; ++s) {
        const Series f = sampler.multiplicative(order);
        const Series g = sampler.multiplicative(order);
        const LaurentPoly a = sampler.laurent();
        const LaurentPoly b = sampler.laurent();
        const Series fa = power_structure(f, a);

        checker.check("f^0 = 1", power_structure(f, LaurentPoly()), one, s);
        checker.check("f^1 = f", power_structure(f, LaurentPoly(1L)), f, s);
        checker.check("f^(a+b) = f^a f^b", power_structure(f, a + b), fa * power_structure(f, b), s);
        checker.check("f^(ab) = (f^a)^b", power_structure(f, a * b), power_structure(fa, b), s);
        checker.check("(fg)^a = f^a g^a", power_structure(f * g, a), fa * power_structure(g, a), s);

        Series one_plus_t = one;
        one_plus_t.add_term({1}, LaurentPoly(1L));
        Series linear = one;
        linear.add_term({1}, a);
        checker.check("(1+t)^a = 1 + a t + O(t^2)", power_structure(one_plus_t, a).truncated(1),
                      linear.truncated(1), s);

        for (int n : {2, 3}) {
            checker.check("f(t^" + std::to_string(n) + ")^a = f^a(t^" + std::to_string(n) + ")",
                          power_structure(substitute_power(f, n), a), substitute_power(fa, n), s);
        }

        // Continuity: changing f above degree k leaves the k-jet of f^a alone.
        const int k = sampler.uniform(1, order - 1);
        Series perturbed = f;
        perturbed.add_term({sampler.uniform(k + 1, order)},
                           LaurentPoly::monomial(Integer(sampler.uniform(1, 2)), sampler.uniform(-2, 2)));
        checker.check("continuity", power_structure(perturbed, a).truncated(k), fa.truncated(k), s);

        const Series h = sampler.additive(order);
        const Series h2 = sampler.additive(order);
        const Series exp_h = exp_pleth(h);
        checker.check("Exp(Log f) = f", exp_pleth(log_pleth(f)), f, s);
        checker.check("Log(Exp h) = h", log_pleth(exp_h), h, s);
        checker.check("Exp(h + h') = Exp(h) Exp(h')", exp_pleth(h + h2), exp_h * exp_pleth(h2), s);
        for (int n : {2, 3}) {
            checker.check("Exp(h(t^" + std::to_string(n) + ")) = Exp(h)(t^" + std::to_string(n) + ")",
                          exp_pleth(substitute_power(h, n)), substitute_power(exp_h, n), s);
        }
        checker.check("Exp adams path = Exp product path", exp_h, exp_pleth_product(h), s);
    }
    if (report.passed) {
        report.detail = std::to_string(options.samples) + " samples, order " + std::to_string(order) +
                        ", seed " + std::to_string(options.seed);
    }
    return report;
}

} // namespace motivic
