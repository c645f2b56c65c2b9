#include "motivic/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "motivic/plethystic.hpp"
#include "parallel.hpp"

namespace motivic {

Quiver::Quiver(std::size_t vertex_count, std::vector<Arrow> arrows)
    : vertex_count_(vertex_count), arrows_(std::move(arrows))
{
    require(vertex_count_ >= 1, "Quiver: at least one vertex required");
    for (const auto& [s, t] : arrows_) {
        require(s < vertex_count_ && t < vertex_count_,
                "Quiver: arrow endpoint out of range (" + std::to_string(s) + "->" + std::to_string(t) + ")");
    }
}

Quiver Quiver::jordan()
{
    return Quiver(1, {{0, 0}});
}

DimVector::DimVector(std::initializer_list<int> entries) : DimVector(std::vector<int>(entries)) {}

DimVector::DimVector(std::vector<int> entries) : entries_(std::move(entries))
{
    for (int x : entries_) {
        require(x >= 0, "DimVector: entries must be non-negative");
    }
}

int DimVector::total() const
{
    return std::accumulate(entries_.begin(), entries_.end(), 0);
}

namespace {

void partitions_of(int remaining, int max_part, Partition& prefix, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_of(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

int partition_size(const Partition& p)
{
    return std::accumulate(p.begin(), p.end(), 0);
}

} // namespace

std::vector<Partition> partitions_up_to(int max_size)
{
    require(max_size >= 0, "partitions_up_to: size must be non-negative");
    std::vector<Partition> out;
    Partition prefix;
    for (int n = 0; n <= max_size; ++n) {
        partitions_of(n, n, prefix, out);
    }
    return out;
}

PartitionCollection::PartitionCollection(std::vector<Partition> parts) : parts_(std::move(parts))
{
    for (const auto& p : parts_) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            require(p[i] >= 1, "PartitionCollection: parts must be positive");
            require(i == 0 || p[i] <= p[i - 1], "PartitionCollection: parts must be weakly decreasing");
        }
    }
}

std::vector<int> PartitionCollection::theta(std::size_t k) const
{
    require(k >= 1, "theta: index is 1-based");
    std::vector<int> out(parts_.size(), 0);
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (k <= parts_[i].size()) {
            out[i] = parts_[i][k - 1];
        }
    }
    return out;
}

std::size_t PartitionCollection::max_length() const
{
    std::size_t len = 0;
    for (const auto& p : parts_) {
        len = std::max(len, p.size());
    }
    return len;
}

std::vector<int> PartitionCollection::sizes() const
{
    std::vector<int> out;
    out.reserve(parts_.size());
    for (const auto& p : parts_) {
        out.push_back(partition_size(p));
    }
    return out;
}

std::vector<PartitionCollection> partition_collections(std::size_t vertex_count, int max_total)
{
    const auto all = partitions_up_to(max_total);
    std::vector<PartitionCollection> out;
    std::vector<Partition> current;
    // Depth-first over vertices with the remaining size budget.
    auto recurse = [&](auto&& self, int budget) -> void {
        if (current.size() == vertex_count) {
            out.emplace_back(current);
            return;
        }
        for (const auto& p : all) {
            const int s = partition_size(p);
            if (s > budget) {
                break;
            }
            current.push_back(p);
            self(self, budget - s);
            current.pop_back();
        }
    };
    recurse(recurse, max_total);
    return out;
}

long euler_form(const Quiver& quiver, const std::vector<int>& v, const std::vector<int>& w)
{
    require(v.size() == quiver.vertex_count() && w.size() == quiver.vertex_count(),
            "euler_form: dimension vectors must have one entry per vertex");
    long out = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += static_cast<long>(v[i]) * w[i];
    }
    for (const auto& [s, t] : quiver.arrows()) {
        out -= static_cast<long>(v[s]) * w[t];
    }
    return out;
}

long euler_form(const Quiver& quiver, const DimVector& v, const DimVector& w)
{
    return euler_form(quiver, v.entries(), w.entries());
}

long nakajima_dimension(const Quiver& quiver, const DimVector& v, const DimVector& w)
{
    require(v.size() == quiver.vertex_count() && w.size() == quiver.vertex_count(),
            "nakajima_dimension: dimension vectors must have one entry per vertex");
    long dot = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        dot += static_cast<long>(v[i]) * w[i];
    }
    const long dim = 2 * (dot - euler_form(quiver, v, v));
    ensure(dim % 2 == 0, "nakajima_dimension: odd dimension");
    return dim;
}

RationalFn::ZPoly q_pochhammer_poly(int n)
{
    require(n >= 0, "q_pochhammer: n must be non-negative");
    RationalFn::ZPoly out{Integer(1)};
    for (int k = 1; k <= n; ++k) {
        RationalFn::ZPoly factor(static_cast<std::size_t>(k) + 1, Integer(0));
        factor[0] = 1;
        factor[static_cast<std::size_t>(k)] = -1;
        out = poly::multiply(out, factor);
    }
    return out;
}

RationalFn q_pochhammer(int n)
{
    auto p = q_pochhammer_poly(n);
    return RationalFn::from_polys(RationalFn::QPoly(p.begin(), p.end()), {Integer(1)});
}

RationalFn pochhammer(const RationalFn& a, int n)
{
    require(n >= 0, "pochhammer: n must be non-negative");
    RationalFn out(1L);
    for (int k = 0; k < n; ++k) {
        out *= RationalFn(1L) - a * RationalFn::q_power(k);
    }
    return out;
}

TruncatedSeries<RationalFn> pochhammer_series(const Exponents& monomial, const DimVector& v, int order)
{
    require(total_degree(monomial) > 0, "pochhammer_series: t must have positive degree");
    auto out = TruncatedSeries<RationalFn>::one(monomial.size(), order);
    for (int n : v.entries()) {
        for (int k = 0; k < n; ++k) {
            auto factor = TruncatedSeries<RationalFn>::one(monomial.size(), order);
            factor.add_term(monomial, -RationalFn::q_power(k));
            out *= factor;
        }
    }
    return out;
}

namespace {

RationalFn collection_term(const Quiver& quiver, const DimVector& w, const PartitionCollection& c,
                           const std::vector<RationalFn::ZPoly>& pochhammers)
{
    const std::size_t len = c.max_length();
    long exponent = 0;
    RationalFn::ZPoly den{Integer(1)};
    if (len > 0) {
        const auto theta1 = c.theta(1);
        for (std::size_t i = 0; i < theta1.size(); ++i) {
            exponent -= static_cast<long>(w[i]) * theta1[i];
        }
    }
    for (std::size_t k = 1; k <= len; ++k) {
        const auto current = c.theta(k);
        const auto next = c.theta(k + 1);
        exponent += euler_form(quiver, current, current);
        for (std::size_t i = 0; i < current.size(); ++i) {
            den = poly::multiply(den, pochhammers[static_cast<std::size_t>(current[i] - next[i])]);
        }
    }
    RationalFn::QPoly num;
    if (exponent >= 0) {
        num.assign(static_cast<std::size_t>(exponent) + 1, Rational(0));
        num.back() = 1;
    } else {
        num = {Rational(1)};
        RationalFn::ZPoly shift(static_cast<std::size_t>(-exponent) + 1, Integer(0));
        shift.back() = 1;
        den = poly::multiply(den, shift);
    }
    return RationalFn::from_polys(std::move(num), std::move(den));
}

void check_framing(const Quiver& quiver, const DimVector& w)
{
    require(w.size() == quiver.vertex_count(), "framing vector must have one entry per vertex");
}

} // namespace

TruncatedSeries<RationalFn> nakajima_numerator(const Quiver& quiver, const DimVector& w, int order)
{
    check_framing(quiver, w);
    require(order >= 0, "nakajima_numerator: order must be non-negative");
    std::vector<RationalFn::ZPoly> pochhammers;
    for (int n = 0; n <= order; ++n) {
        pochhammers.push_back(q_pochhammer_poly(n));
    }

    // Bucket collections by z-monomial; buckets are summed independently.
    std::map<Exponents, std::vector<PartitionCollection>> buckets;
    for (auto& c : partition_collections(quiver.vertex_count(), order)) {
        buckets[c.sizes()].push_back(std::move(c));
    }
    std::vector<const Exponents*> keys;
    std::vector<const std::vector<PartitionCollection>*> groups;
    for (const auto& [e, group] : buckets) {
        keys.push_back(&e);
        groups.push_back(&group);
    }
    std::vector<RationalFn> sums(keys.size());
    detail::parallel_for(keys.size(), [&](std::size_t i) {
        RationalFn acc;
        for (const auto& c : *groups[i]) {
            acc += collection_term(quiver, w, c, pochhammers);
        }
        sums[i] = std::move(acc);
    });

    TruncatedSeries<RationalFn> out(quiver.vertex_count(), order);
    for (std::size_t i = 0; i < keys.size(); ++i) {
        out.add_term(*keys[i], sums[i]);
    }
    return out;
}

TruncatedSeries<LaurentPoly> nakajima_motive_series(const Quiver& quiver, const DimVector& w, int order)
{
    check_framing(quiver, w);
    const auto numerator = nakajima_numerator(quiver, w, order);
    const auto denominator = nakajima_numerator(quiver, DimVector::zero(quiver.vertex_count()), order);
    const auto ratio = numerator * invert(denominator);

    TruncatedSeries<LaurentPoly> out(quiver.vertex_count(), order);
    ratio.for_each_term([&](const Exponents& v, const RationalFn& c) {
        ensure(c.is_laurent(), "nakajima_motive_series: coefficient " + c.to_string() +
                                   " is not a Laurent polynomial in q");
        const long dim = nakajima_dimension(quiver, DimVector(v), w);
        // r(w, L, z) means q^{-1} = L, so substitute q -> L^{-1} then undo L^{-dim/2}.
        LaurentPoly m = dual(c.to_laurent()).shifted(dim / 2);
        if (dim < 0) {
            ensure(m.is_zero(), "nakajima_motive_series: nonzero class in negative dimension");
        }
        ensure(m.is_polynomial() && m.has_nonnegative_coefficients(),
               "nakajima_motive_series: class " + m.to_string() + " is not a polynomial in L with "
               "non-negative coefficients");
        out.add_term(v, m);
    });
    return out;
}

TruncatedSeries<LaurentPoly> nilpotent_from_motive(const Quiver& quiver, const DimVector& w,
                                                   const TruncatedSeries<LaurentPoly>& m_series)
{
    check_framing(quiver, w);
    require(m_series.arity() == quiver.vertex_count(), "nilpotent_from_motive: arity mismatch");
    TruncatedSeries<LaurentPoly> out(m_series.arity(), m_series.order());
    m_series.for_each_term([&](const Exponents& v, const LaurentPoly& m) {
        const long dim = nakajima_dimension(quiver, DimVector(v), w);
        LaurentPoly l = dual(m.shifted(-dim));
        ensure(l.is_polynomial() && l.has_nonnegative_coefficients(),
               "nilpotent_from_motive: class " + l.to_string() + " is not a polynomial in L with "
               "non-negative coefficients");
        out.add_term(v, l);
    });
    return out;
}

TruncatedSeries<LaurentPoly> nilpotent_motive_series(const Quiver& quiver, const DimVector& w, int order)
{
    return nilpotent_from_motive(quiver, w, nakajima_motive_series(quiver, w, order));
}


IdentityReport verify_heine(int order)
{
    require(order >= 0, "verify_heine: order must be non-negative");
    TruncatedSeries<RationalFn> lhs(1, order);
    for (int n = 0; n <= order; ++n) {
        lhs.add_term({n}, q_pochhammer(n).inverse());
    }
    const RationalFn one_minus_q = RationalFn(1L) - RationalFn::q_power(1);
    const auto rhs = exp_pleth(TruncatedSeries<RationalFn>::monomial(one_minus_q.inverse(), {1}, order));
    auto report = compare_series("heine", lhs, rhs);
    report.detail = "order=" + std::to_string(order);
    return report;
}

} // namespace motivic
