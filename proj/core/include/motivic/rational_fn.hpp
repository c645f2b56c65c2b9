#pragma once

#include <string>
#include <vector>

#include "motivic/laurent.hpp"

namespace motivic {

/// Element of the field Q(q), kept in lowest terms.
///
/// Canonical form: numerator/denominator coprime, the denominator is a
/// primitive integer polynomial with positive leading coefficient, and all
/// scalar content lives in the (rational-coefficient) numerator. Equality is
/// therefore a structural comparison.
class RationalFn {
public:
    /// Dense coefficient vectors, index = power of q.
    using QPoly = std::vector<Rational>;
    using ZPoly = std::vector<Integer>;

    RationalFn() : den_{Integer(1)} {}
    RationalFn(long c);
    RationalFn(const Rational& c);
    /// Embeds a Laurent polynomial in q.
    RationalFn(const LaurentPoly& f);
    RationalFn(const QLaurent& f);

    static RationalFn from_polys(QPoly numerator, ZPoly denominator);

    /// q^k for any integer k.
    static RationalFn q_power(long k);

    const QPoly& numerator() const noexcept { return num_; }
    const ZPoly& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.empty(); }
    bool is_denominator_one() const { return den_.size() == 1; }

    /// Converts to a Laurent polynomial in q when the value is one, i.e. the
    /// reduced denominator is q^k and the numerator has integer coefficients.
    /// Throws InvariantViolation otherwise.
    LaurentPoly to_laurent() const;
    bool is_laurent() const;

    RationalFn inverse() const;

    /// Substitutes q -> q^k (k >= 1); the Adams operation on Q(q).
    RationalFn substitute_power(long k) const;

    RationalFn& operator+=(const RationalFn& o);
    RationalFn& operator-=(const RationalFn& o);
    RationalFn& operator*=(const RationalFn& o);
    RationalFn& operator/=(const RationalFn& o);

    friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
    friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
    friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
    friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }
    friend RationalFn operator-(RationalFn a);

    friend bool operator==(const RationalFn& a, const RationalFn& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

    std::string to_string(const std::string& symbol = "q") const;

private:
    void normalize();

    QPoly num_;
    ZPoly den_;
};

namespace poly {

/// Primitive gcd of two integer polynomials (positive leading coefficient).
/// gcd(0, 0) = 0.
RationalFn::ZPoly gcd(const RationalFn::ZPoly& a, const RationalFn::ZPoly& b);

/// Content (positive gcd of the coefficients); zero for the zero polynomial.
Integer content(const RationalFn::ZPoly& a);

/// Exact division; throws InvariantViolation when b does not divide a over Z.
RationalFn::ZPoly exact_divide(const RationalFn::ZPoly& a, const RationalFn::ZPoly& b);

RationalFn::ZPoly multiply(const RationalFn::ZPoly& a, const RationalFn::ZPoly& b);

} // namespace poly

} // namespace motivic
