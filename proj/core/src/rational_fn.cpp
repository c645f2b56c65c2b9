#include "motivic/rational_fn.hpp"

#include <algorithm>
#include <cstdint>

namespace motivic {

using ZPoly = RationalFn::ZPoly;
using QPoly = RationalFn::QPoly;

namespace {

template <class P>
void trim(P& p)
{
    while (!p.empty() && sgn(p.back()) == 0) {
        p.pop_back();
    }
}

long degree(const ZPoly& p)
{
    return static_cast<long>(p.size()) - 1;
}

ZPoly primitive_part(const ZPoly& p)
{
    Integer c = poly::content(p);
    if (c == 0 || c == 1) {
        return p;
    }
    ZPoly out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        mpz_divexact(out[i].get_mpz_t(), p[i].get_mpz_t(), c.get_mpz_t());
    }
    return out;
}

void make_leading_positive(ZPoly& p)
{
    if (!p.empty() && sgn(p.back()) < 0) {
        for (auto& c : p) {
            c = -c;
        }
    }
}

// Euclid over F_p, used as a cheap certificate that a gcd over Z is trivial:
// when p divides neither leading coefficient, deg gcd(a mod p, b mod p) bounds
// deg gcd(a, b) from above.
constexpr std::uint64_t kModulus = 2147483647ULL;

using ModPoly = std::vector<std::uint64_t>;

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e)
{
    std::uint64_t r = 1;
    b %= kModulus;
    while (e > 0) {
        if (e & 1U) {
            r = r * b % kModulus;
        }
        b = b * b % kModulus;
        e >>= 1U;
    }
    return r;
}

ModPoly reduce_mod(const ZPoly& p)
{
    ModPoly out(p.size());
    Integer m(static_cast<unsigned long>(kModulus));
    for (std::size_t i = 0; i < p.size(); ++i) {
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), p[i].get_mpz_t(), m.get_mpz_t());
        out[i] = r.get_ui();
    }
    while (!out.empty() && out.back() == 0) {
        out.pop_back();
    }
    return out;
}

long mod_gcd_degree(ModPoly a, ModPoly b)
{
    if (a.size() < b.size()) {
        std::swap(a, b);
    }
    while (!b.empty()) {
        const std::uint64_t inv = mod_pow(b.back(), kModulus - 2);
        while (a.size() >= b.size()) {
            const std::uint64_t factor = a.back() * inv % kModulus;
            const std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                a[i + shift] = (a[i + shift] + kModulus - factor * b[i] % kModulus) % kModulus;
            }
            while (!a.empty() && a.back() == 0) {
                a.pop_back();
            }
            if (a.empty()) {
                break;
            }
        }
        std::swap(a, b);
    }
    return static_cast<long>(a.size()) - 1;
}

bool certainly_coprime(const ZPoly& a, const ZPoly& b)
{
    Integer m(static_cast<unsigned long>(kModulus));
    if (mpz_divisible_p(a.back().get_mpz_t(), m.get_mpz_t()) ||
        mpz_divisible_p(b.back().get_mpz_t(), m.get_mpz_t())) {
        return false;
    }
    return mod_gcd_degree(reduce_mod(a), reduce_mod(b)) == 0;
}

// Pseudo-remainder up to a power of lead(b).
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b)
{
    const Integer& lead = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        const Integer c = a.back();
        const std::size_t shift = a.size() - b.size();
        for (auto& x : a) {
            x *= lead;
        }
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[i + shift] -= c * b[i];
        }
        trim(a);
    }
    return a;
}

QPoly multiply_q(const QPoly& a, const ZPoly& b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    QPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    trim(out);
    return out;
}

QPoly multiply_qq(const QPoly& a, const QPoly& b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    QPoly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    trim(out);
    return out;
}

QPoly add_q(QPoly a, const QPoly& b)
{
    if (a.size() < b.size()) {
        a.resize(b.size(), Rational(0));
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] += b[i];
    }
    trim(a);
    return a;
}

// Splits a rational polynomial into (scalar, primitive integer polynomial).
std::pair<Rational, ZPoly> split_content(const QPoly& p)
{
    Integer lcm_den = 1;
    for (const auto& c : p) {
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    }
    ZPoly ints(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        Rational scaled = p[i] * lcm_den;
        ints[i] = scaled.get_num();
    }
    Integer c = poly::content(ints);
    Rational scalar(c, lcm_den);
    scalar.canonicalize();
    return {scalar, primitive_part(ints)};
}

} // namespace

namespace poly {

Integer content(const ZPoly& a)
{
    Integer g = 0;
    for (const auto& c : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) {
            break;
        }
    }
    return g;
}

ZPoly gcd(const ZPoly& a_in, const ZPoly& b_in)
{
    ZPoly a = primitive_part(a_in);
    ZPoly b = primitive_part(b_in);
    trim(a);
    trim(b);
    if (a.empty()) {
        make_leading_positive(b);
        return b;
    }
    if (b.empty()) {
        make_leading_positive(a);
        return a;
    }
    if (degree(a) == 0 || degree(b) == 0 || certainly_coprime(a, b)) {
        return {Integer(1)};
    }
    if (a.size() < b.size()) {
        std::swap(a, b);
    }
    while (!b.empty()) {
        ZPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        b = primitive_part(r);
    }
    a = primitive_part(a);
    make_leading_positive(a);
    return a;
}

ZPoly exact_divide(const ZPoly& a_in, const ZPoly& b)
{
    ZPoly a = a_in;
    trim(a);
    ensure(!b.empty(), "exact_divide: division by zero polynomial");
    if (a.empty()) {
        return {};
    }
    ensure(a.size() >= b.size(), "exact_divide: divisor has larger degree");
    ZPoly quotient(a.size() - b.size() + 1);
    const Integer& lead = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        ensure(mpz_divisible_p(a.back().get_mpz_t(), lead.get_mpz_t()) != 0,
               "exact_divide: inexact division");
        Integer c;
        mpz_divexact(c.get_mpz_t(), a.back().get_mpz_t(), lead.get_mpz_t());
        quotient[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[i + shift] -= c * b[i];
        }
        trim(a);
    }
    ensure(a.empty(), "exact_divide: nonzero remainder");
    trim(quotient);
    return quotient;
}

ZPoly multiply(const ZPoly& a, const ZPoly& b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    ZPoly out(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    trim(out);
    return out;
}

} // namespace poly

RationalFn::RationalFn(long c) : num_{Rational(c)}, den_{Integer(1)}
{
    trim(num_);
}

RationalFn::RationalFn(const Rational& c) : num_{c}, den_{Integer(1)}
{
    num_.front().canonicalize();
    trim(num_);
}

RationalFn::RationalFn(const LaurentPoly& f) : RationalFn(to_rational(f)) {}

RationalFn::RationalFn(const QLaurent& f) : den_{Integer(1)}
{
    if (f.is_zero()) {
        return;
    }
    const auto shift = -std::min<QLaurent::Exponent>(*f.min_exponent(), 0);
    num_.assign(static_cast<std::size_t>(*f.max_exponent() + shift + 1), Rational(0));
    for (const auto& [e, c] : f.terms()) {
        num_[static_cast<std::size_t>(e + shift)] = c;
    }
    if (shift > 0) {
        den_.assign(static_cast<std::size_t>(shift + 1), Integer(0));
        den_.back() = 1;
    }
    normalize();
}

RationalFn RationalFn::from_polys(QPoly numerator, ZPoly denominator)
{
    trim(denominator);
    require(!denominator.empty(), "RationalFn: zero denominator");
    RationalFn out;
    out.num_ = std::move(numerator);
    for (auto& c : out.num_) {
        c.canonicalize();
    }
    out.den_ = std::move(denominator);
    out.normalize();
    return out;
}

RationalFn RationalFn::q_power(long k)
{
    RationalFn out;
    if (k >= 0) {
        out.num_.assign(static_cast<std::size_t>(k + 1), Rational(0));
        out.num_.back() = 1;
    } else {
        out.num_ = {Rational(1)};
        out.den_.assign(static_cast<std::size_t>(-k + 1), Integer(0));
        out.den_.back() = 1;
    }
    return out;
}

void RationalFn::normalize()
{
    trim(num_);
    trim(den_);
    ensure(!den_.empty(), "RationalFn: zero denominator");
    if (num_.empty()) {
        den_ = {Integer(1)};
        return;
    }
    auto [scalar, n] = split_content(num_);
    Integer dc = poly::content(den_);
    ZPoly d = primitive_part(den_);
    scalar /= Rational(dc);
    ZPoly g = poly::gcd(n, d);
    if (g.size() > 1) {
        n = poly::exact_divide(n, g);
        d = poly::exact_divide(d, g);
    }
    if (sgn(d.back()) < 0) {
        for (auto& c : d) {
            c = -c;
        }
        scalar = -scalar;
    }
    num_.resize(n.size());
    for (std::size_t i = 0; i < n.size(); ++i) {
        num_[i] = scalar * n[i];
    }
    den_ = std::move(d);
}

bool RationalFn::is_laurent() const
{
    for (std::size_t i = 0; i + 1 < den_.size(); ++i) {
        if (sgn(den_[i]) != 0) {
            return false;
        }
    }
    if (den_.back() != 1) {
        return false;
    }
    return std::all_of(num_.begin(), num_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

LaurentPoly RationalFn::to_laurent() const
{
    ensure(is_laurent(), "RationalFn " + to_string() + " is not a Laurent polynomial in q");
    const auto shift = static_cast<LaurentPoly::Exponent>(den_.size()) - 1;
    LaurentPoly out;
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (sgn(num_[i]) != 0) {
            out += LaurentPoly::monomial(num_[i].get_num(), static_cast<LaurentPoly::Exponent>(i) - shift);
        }
    }
    return out;
}

RationalFn RationalFn::inverse() const
{
    require(!is_zero(), "RationalFn: inverse of zero");
    auto [scalar, n] = split_content(num_);
    QPoly new_num(den_.size());
    for (std::size_t i = 0; i < den_.size(); ++i) {
        new_num[i] = Rational(den_[i]) / scalar;
    }
    return from_polys(std::move(new_num), std::move(n));
}

RationalFn RationalFn::substitute_power(long k) const
{
    require(k >= 1, "RationalFn::substitute_power: k must be >= 1");
    if (k == 1) {
        return *this;
    }
    const auto stretch_q = [k](const QPoly& p) {
        QPoly out(p.empty() ? 0 : (p.size() - 1) * static_cast<std::size_t>(k) + 1, Rational(0));
        for (std::size_t i = 0; i < p.size(); ++i) {
            out[i * static_cast<std::size_t>(k)] = p[i];
        }
        return out;
    };
    ZPoly d((den_.size() - 1) * static_cast<std::size_t>(k) + 1, Integer(0));
    for (std::size_t i = 0; i < den_.size(); ++i) {
        d[i * static_cast<std::size_t>(k)] = den_[i];
    }
    return from_polys(stretch_q(num_), std::move(d));
}

RationalFn& RationalFn::operator+=(const RationalFn& o)
{
    if (o.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = o;
    }
    if (den_ == o.den_) {
        num_ = add_q(std::move(num_), o.num_);
        normalize();
        return *this;
    }
    ZPoly g = poly::gcd(den_, o.den_);
    ZPoly a_cof = g.size() > 1 ? poly::exact_divide(den_, g) : den_;
    ZPoly b_cof = g.size() > 1 ? poly::exact_divide(o.den_, g) : o.den_;
    num_ = add_q(multiply_q(num_, b_cof), multiply_q(o.num_, a_cof));
    den_ = poly::multiply(den_, b_cof);
    normalize();
    return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& o)
{
    return *this += -o;
}

RationalFn& RationalFn::operator*=(const RationalFn& o)
{
    if (is_zero() || o.is_zero()) {
        *this = RationalFn();
        return *this;
    }
    num_ = multiply_qq(num_, o.num_);
    den_ = poly::multiply(den_, o.den_);
    normalize();
    return *this;
}

RationalFn& RationalFn::operator/=(const RationalFn& o)
{
    return *this *= o.inverse();
}

RationalFn operator-(RationalFn a)
{
    for (auto& c : a.num_) {
        c = -c;
    }
    return a;
}

std::string RationalFn::to_string(const std::string& symbol) const
{
    QLaurent n;
    for (std::size_t i = 0; i < num_.size(); ++i) {
        n += QLaurent::monomial(num_[i], static_cast<QLaurent::Exponent>(i));
    }
    if (is_denominator_one()) {
        return n.to_string(symbol);
    }
    LaurentPoly d;
    for (std::size_t i = 0; i < den_.size(); ++i) {
        d += LaurentPoly::monomial(den_[i], static_cast<LaurentPoly::Exponent>(i));
    }
    return "(" + n.to_string(symbol) + ")/(" + d.to_string(symbol) + ")";
}

} // namespace motivic
