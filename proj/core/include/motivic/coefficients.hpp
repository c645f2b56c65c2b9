#pragma once

#include <string>

#include "motivic/laurent.hpp"
#include "motivic/rational_fn.hpp"

namespace motivic {

/// Ring operations a TruncatedSeries needs beyond the arithmetic operators.
///
/// `Completion` is the smallest ring containing C in which division by
/// nonzero integers is possible (needed for exp/log); `lift` embeds C into it
/// and `lower` maps back, asserting the value lies in C.
template <class C>
struct CoefficientTraits;

template <>
struct CoefficientTraits<LaurentPoly> {
    using Completion = QLaurent;
    static constexpr const char* name = "LaurentPoly";

    static bool is_zero(const LaurentPoly& c) { return c.is_zero(); }
    static bool is_unit(const LaurentPoly& c) { return c.is_unit(); }
    static LaurentPoly unit_inverse(const LaurentPoly& c) { return c.unit_inverse(); }
    static LaurentPoly adams(const LaurentPoly& c, long k) { return c.substitute_power(k); }
    static LaurentPoly from_integer(const Integer& n) { return LaurentPoly(n); }
    static QLaurent lift(const LaurentPoly& c) { return to_rational(c); }
    static LaurentPoly lower(const QLaurent& c) { return to_integral(c); }
    static std::string to_string(const LaurentPoly& c) { return c.to_string("L"); }
};

template <>
struct CoefficientTraits<QLaurent> {
    using Completion = QLaurent;
    static constexpr const char* name = "QLaurent";

    static bool is_zero(const QLaurent& c) { return c.is_zero(); }
    static bool is_unit(const QLaurent& c) { return c.is_unit(); }
    static QLaurent unit_inverse(const QLaurent& c) { return c.unit_inverse(); }
    static QLaurent adams(const QLaurent& c, long k) { return c.substitute_power(k); }
    static QLaurent from_integer(const Integer& n) { return QLaurent(Rational(n)); }
    static QLaurent lift(const QLaurent& c) { return c; }
    static QLaurent lower(const QLaurent& c) { return c; }
    static QLaurent scale(const QLaurent& c, const Rational& s) { return c * s; }
    static std::string to_string(const QLaurent& c) { return c.to_string("L"); }
};

/// Q(q) with the Adams operations q -> q^k, i.e. q is treated as a line
/// element exactly like L.
template <>
struct CoefficientTraits<RationalFn> {
    using Completion = RationalFn;
    static constexpr const char* name = "RationalFn";

    static bool is_zero(const RationalFn& c) { return c.is_zero(); }
    static bool is_unit(const RationalFn& c) { return !c.is_zero(); }
    static RationalFn unit_inverse(const RationalFn& c) { return c.inverse(); }
    static RationalFn adams(const RationalFn& c, long k) { return c.substitute_power(k); }
    static RationalFn from_integer(const Integer& n) { return RationalFn(Rational(n)); }
    static RationalFn lift(const RationalFn& c) { return c; }
    static RationalFn lower(const RationalFn& c) { return c; }
    static RationalFn scale(const RationalFn& c, const Rational& s) { return c * RationalFn(s); }
    static std::string to_string(const RationalFn& c) { return c.to_string("q"); }
};

/// Plain rationals; Adams operations act trivially.
template <>
struct CoefficientTraits<Rational> {
    using Completion = Rational;
    static constexpr const char* name = "Rational";

    static bool is_zero(const Rational& c) { return sgn(c) == 0; }
    static bool is_unit(const Rational& c) { return sgn(c) != 0; }
    static Rational unit_inverse(const Rational& c) { return Rational(1) / c; }
    static Rational adams(const Rational& c, long) { return c; }
    static Rational from_integer(const Integer& n) { return Rational(n); }
    static Rational lift(const Rational& c) { return c; }
    static Rational lower(const Rational& c) { return c; }
    static Rational scale(const Rational& c, const Rational& s) { return c * s; }
    static std::string to_string(const Rational& c) { return c.get_str(); }
};

} // namespace motivic
