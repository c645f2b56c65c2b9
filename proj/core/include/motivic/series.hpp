#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "motivic/coefficients.hpp"
#include "motivic/errors.hpp"

namespace motivic {

/// Exponent vector of a monomial z_0^{e_0} ... z_{k-1}^{e_{k-1}}.
using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e)
{
    return std::accumulate(e.begin(), e.end(), 0);
}

/// Truncated power series in `arity` commuting variables (t when arity is 1,
/// z_0..z_{k-1} otherwise) with coefficients in C.
///
/// The truncation order N is explicit: every stored monomial has total degree
/// <= N, and the series represents its true value modulo all monomials of
/// total degree > N. Binary operations produce min(N_a, N_b). Equality
/// compares coefficients only up to the common order.
template <class C>
class TruncatedSeries {
public:
    using Coefficient = C;
    using Traits = CoefficientTraits<C>;
    using Homogeneous = std::map<Exponents, C>;

    TruncatedSeries(std::size_t arity, int order) : arity_(arity), order_(order)
    {
        require(arity >= 1, "TruncatedSeries: arity must be positive");
        require(order >= 0, "TruncatedSeries: order must be non-negative");
        graded_.resize(static_cast<std::size_t>(order) + 1);
    }

    static TruncatedSeries constant(const C& c, std::size_t arity, int order)
    {
        TruncatedSeries out(arity, order);
        out.add_term(Exponents(arity, 0), c);
        return out;
    }

    static TruncatedSeries one(std::size_t arity, int order) { return constant(C(1L), arity, order); }

    static TruncatedSeries monomial(const C& c, const Exponents& e, int order)
    {
        TruncatedSeries out(e.size(), order);
        out.add_term(e, c);
        return out;
    }

    /// Univariate series sum_n coefficients[n] t^n.
    static TruncatedSeries from_coefficients(const std::vector<C>& coefficients, int order)
    {
        TruncatedSeries out(1, order);
        for (std::size_t n = 0; n < coefficients.size(); ++n) {
            out.add_term({static_cast<int>(n)}, coefficients[n]);
        }
        return out;
    }

    std::size_t arity() const noexcept { return arity_; }
    int order() const noexcept { return order_; }

    C coefficient(const Exponents& e) const
    {
        require(e.size() == arity_, "coefficient: exponent vector has wrong length");
        const int d = total_degree(e);
        if (d > order_) {
            throw PreconditionError("coefficient: degree " + std::to_string(d) +
                                    " exceeds truncation order " + std::to_string(order_));
        }
        const auto& h = graded_[static_cast<std::size_t>(d)];
        auto it = h.find(e);
        return it == h.end() ? C() : it->second;
    }

    /// Coefficient of t^n of a univariate series.
    C coefficient(int n) const
    {
        require(arity_ == 1, "coefficient(n) requires a univariate series");
        return coefficient(Exponents{n});
    }

    C constant_term() const { return coefficient(Exponents(arity_, 0)); }

    /// Degree-d homogeneous component.
    const Homogeneous& homogeneous(int d) const { return graded_.at(static_cast<std::size_t>(d)); }

    /// Adds c * z^e; monomials above the truncation order are discarded.
    void add_term(const Exponents& e, const C& c)
    {
        require(e.size() == arity_, "add_term: exponent vector has wrong length");
        require(std::all_of(e.begin(), e.end(), [](int x) { return x >= 0; }),
                "add_term: negative exponent");
        const int d = total_degree(e);
        if (d > order_ || Traits::is_zero(c)) {
            return;
        }
        accumulate(graded_[static_cast<std::size_t>(d)], e, c);
    }

    /// Visits terms by increasing total degree, lexicographically within a degree.
    template <class F>
    void for_each_term(F&& f) const
    {
        for (const auto& h : graded_) {
            for (const auto& [e, c] : h) {
                f(e, c);
            }
        }
    }

    std::size_t term_count() const
    {
        std::size_t n = 0;
        for (const auto& h : graded_) {
            n += h.size();
        }
        return n;
    }

    TruncatedSeries truncated(int new_order) const
    {
        require(new_order >= 0 && new_order <= order_, "truncated: order can only decrease");
        TruncatedSeries out(arity_, new_order);
        for (int d = 0; d <= new_order; ++d) {
            out.graded_[static_cast<std::size_t>(d)] = graded_[static_cast<std::size_t>(d)];
        }
        return out;
    }

    template <class D, class F>
    TruncatedSeries<D> map_coefficients(F&& f) const
    {
        TruncatedSeries<D> out(arity_, order_);
        for_each_term([&](const Exponents& e, const C& c) { out.add_term(e, f(c)); });
        return out;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o)
    {
        check_compatible(o);
        lower_order_to(o.order_);
        for (int d = 0; d <= order_; ++d) {
            for (const auto& [e, c] : o.graded_[static_cast<std::size_t>(d)]) {
                accumulate(graded_[static_cast<std::size_t>(d)], e, c);
            }
        }
        return *this;
    }

    TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this += -o; }

    TruncatedSeries& operator*=(const C& s)
    {
        for (auto& h : graded_) {
            for (auto it = h.begin(); it != h.end();) {
                it->second = it->second * s;
                it = Traits::is_zero(it->second) ? h.erase(it) : std::next(it);
            }
        }
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const C& s) { return a *= s; }
    friend TruncatedSeries operator*(const C& s, TruncatedSeries a) { return a *= s; }

    friend TruncatedSeries operator-(TruncatedSeries a)
    {
        for (auto& h : a.graded_) {
            for (auto& [e, c] : h) {
                c = -c;
            }
        }
        return a;
    }

    /// Cauchy product truncated at the smaller order.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        a.check_compatible(b);
        const int order = std::min(a.order_, b.order_);
        TruncatedSeries out(a.arity_, order);
        for (int d = 0; d <= order; ++d) {
            auto& target = out.graded_[static_cast<std::size_t>(d)];
            for (int i = 0; i <= d; ++i) {
                multiply_into(target, a.graded_[static_cast<std::size_t>(i)],
                              b.graded_[static_cast<std::size_t>(d - i)]);
            }
        }
        return out;
    }

    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        if (a.arity_ != b.arity_) {
            return false;
        }
        const int order = std::min(a.order_, b.order_);
        for (int d = 0; d <= order; ++d) {
            if (a.graded_[static_cast<std::size_t>(d)] != b.graded_[static_cast<std::size_t>(d)]) {
                return false;
            }
        }
        return true;
    }

    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

    /// out += a * b for homogeneous components a, b.
    static void multiply_into(Homogeneous& out, const Homogeneous& a, const Homogeneous& b)
    {
        if (a.empty() || b.empty()) {
            return;
        }
        Exponents e(a.begin()->first.size());
        for (const auto& [ea, ca] : a) {
            for (const auto& [eb, cb] : b) {
                for (std::size_t i = 0; i < e.size(); ++i) {
                    e[i] = ea[i] + eb[i];
                }
                accumulate(out, e, ca * cb);
            }
        }
    }

    static void accumulate(Homogeneous& h, const Exponents& e, const C& c)
    {
        if (Traits::is_zero(c)) {
            return;
        }
        auto [it, inserted] = h.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (Traits::is_zero(it->second)) {
                h.erase(it);
            }
        }
    }

private:
    void check_compatible(const TruncatedSeries& o) const
    {
        require(arity_ == o.arity_, "series arity mismatch: " + std::to_string(arity_) + " vs " +
                                        std::to_string(o.arity_));
    }

    void lower_order_to(int order)
    {
        if (order < order_) {
            order_ = order;
            graded_.resize(static_cast<std::size_t>(order) + 1);
        }
    }

    std::size_t arity_;
    int order_;
    std::vector<Homogeneous> graded_;
};

/// Multiplicative inverse; the constant term must be a unit of C.
template <class C>
TruncatedSeries<C> invert(const TruncatedSeries<C>& a)
{
    using S = TruncatedSeries<C>;
    using Traits = CoefficientTraits<C>;
    const C c0 = a.constant_term();
    require(Traits::is_unit(c0), "invert: constant term " + Traits::to_string(c0) + " is not a unit");
    const C inv0 = Traits::unit_inverse(c0);
    S out = S::constant(inv0, a.arity(), a.order());
    std::vector<typename S::Homogeneous> parts(static_cast<std::size_t>(a.order()) + 1);
    parts[0] = out.homogeneous(0);
    for (int d = 1; d <= a.order(); ++d) {
        typename S::Homogeneous acc;
        for (int j = 1; j <= d; ++j) {
            S::multiply_into(acc, a.homogeneous(j), parts[static_cast<std::size_t>(d - j)]);
        }
        for (auto& [e, c] : acc) {
            C value = -(c * inv0);
            out.add_term(e, value);
            S::accumulate(parts[static_cast<std::size_t>(d)], e, value);
        }
    }
    return out;
}

/// Substitutes every variable x -> x^k. The result keeps order N, so only
/// source terms of degree <= floor(N/k) contribute.
template <class C>
TruncatedSeries<C> substitute_power(const TruncatedSeries<C>& a, int k)
{
    require(k >= 1, "substitute_power: k must be >= 1");
    TruncatedSeries<C> out(a.arity(), a.order());
    a.for_each_term([&](const Exponents& e, const C& c) {
        if (total_degree(e) * k > a.order()) {
            return;
        }
        Exponents scaled = e;
        for (auto& x : scaled) {
            x *= k;
        }
        out.add_term(scaled, c);
    });
    return out;
}

/// Adams operation psi_k: every variable x -> x^k and psi_k on coefficients
/// (L -> L^k, q -> q^k).
template <class C>
TruncatedSeries<C> adams(const TruncatedSeries<C>& a, int k)
{
    require(k >= 1, "adams: k must be >= 1");
    TruncatedSeries<C> out(a.arity(), a.order());
    a.for_each_term([&](const Exponents& e, const C& c) {
        if (total_degree(e) * k > a.order()) {
            return;
        }
        Exponents scaled = e;
        for (auto& x : scaled) {
            x *= k;
        }
        out.add_term(scaled, CoefficientTraits<C>::adams(c, k));
    });
    return out;
}

/// Univariate substitution t -> s*t.
template <class C>
TruncatedSeries<C> scale_variable(const TruncatedSeries<C>& a, const C& s)
{
    require(a.arity() == 1, "scale_variable requires a univariate series");
    TruncatedSeries<C> out(1, a.order());
    C power(1L);
    for (int n = 0; n <= a.order(); ++n) {
        out.add_term({n}, a.coefficient(n) * power);
        power = power * s;
    }
    return out;
}

/// Classical exponential of a series with zero constant term over a ring in
/// which integers are invertible. Uses d*g_d = sum_j j*h_j*g_{d-j}, which is
/// the Euler-derivation form of g' = h'g and works in any number of variables.
template <class C>
TruncatedSeries<C> exp_series(const TruncatedSeries<C>& h)
{
    using S = TruncatedSeries<C>;
    using Traits = CoefficientTraits<C>;
    require(Traits::is_zero(h.constant_term()), "exp_series: constant term must vanish");
    S out = S::one(h.arity(), h.order());
    std::vector<typename S::Homogeneous> parts(static_cast<std::size_t>(h.order()) + 1);
    parts[0] = out.homogeneous(0);
    for (int d = 1; d <= h.order(); ++d) {
        typename S::Homogeneous acc;
        for (int j = 1; j <= d; ++j) {
            typename S::Homogeneous weighted;
            for (const auto& [e, c] : h.homogeneous(j)) {
                weighted.emplace(e, Traits::scale(c, Rational(j)));
            }
            S::multiply_into(acc, weighted, parts[static_cast<std::size_t>(d - j)]);
        }
        for (auto& [e, c] : acc) {
            C value = Traits::scale(c, Rational(1, d));
            out.add_term(e, value);
            S::accumulate(parts[static_cast<std::size_t>(d)], e, value);
        }
    }
    return out;
}

/// Classical logarithm of a series with constant term 1; inverse of exp_series.
template <class C>
TruncatedSeries<C> log_series(const TruncatedSeries<C>& g)
{
    using S = TruncatedSeries<C>;
    using Traits = CoefficientTraits<C>;
    require(g.constant_term() == C(1L), "log_series: constant term must be 1");
    S out(g.arity(), g.order());
    // h_d = g_d - (1/d) sum_{j<d} j h_j g_{d-j}
    std::vector<typename S::Homogeneous> parts(static_cast<std::size_t>(g.order()) + 1);
    for (int d = 1; d <= g.order(); ++d) {
        typename S::Homogeneous acc;
        for (int j = 1; j < d; ++j) {
            typename S::Homogeneous weighted;
            for (const auto& [e, c] : parts[static_cast<std::size_t>(j)]) {
                weighted.emplace(e, Traits::scale(c, Rational(j)));
            }
            S::multiply_into(acc, weighted, g.homogeneous(d - j));
        }
        typename S::Homogeneous value = g.homogeneous(d);
        for (const auto& [e, c] : acc) {
            S::accumulate(value, e, -Traits::scale(c, Rational(1, d)));
        }
        for (const auto& [e, c] : value) {
            out.add_term(e, c);
        }
        parts[static_cast<std::size_t>(d)] = std::move(value);
    }
    return out;
}

/// Embeds a series into the coefficient completion (e.g. Z -> Q coefficients).
template <class C>
TruncatedSeries<typename CoefficientTraits<C>::Completion> lift(const TruncatedSeries<C>& a)
{
    using D = typename CoefficientTraits<C>::Completion;
    return a.template map_coefficients<D>([](const C& c) { return CoefficientTraits<C>::lift(c); });
}

/// Maps a completion-valued series back to C, asserting every coefficient lies in C.
template <class C>
TruncatedSeries<C> lower(const TruncatedSeries<typename CoefficientTraits<C>::Completion>& a)
{
    using D = typename CoefficientTraits<C>::Completion;
    return a.template map_coefficients<C>([](const D& c) { return CoefficientTraits<C>::lower(c); });
}

/// First monomial (in graded order) where a and b differ below their common
/// order, or nullopt when they agree.
template <class C>
std::optional<Exponents> first_difference(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b)
{
    require(a.arity() == b.arity(), "first_difference: arity mismatch");
    const int order = std::min(a.order(), b.order());
    for (int d = 0; d <= order; ++d) {
        std::map<Exponents, bool> keys;
        for (const auto& [e, c] : a.homogeneous(d)) {
            keys.emplace(e, true);
        }
        for (const auto& [e, c] : b.homogeneous(d)) {
            keys.emplace(e, true);
        }
        for (const auto& [e, unused] : keys) {
            if (a.coefficient(e) != b.coefficient(e)) {
                return e;
            }
        }
    }
    return std::nullopt;
}

} // namespace motivic
