#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "motivic/errors.hpp"

namespace motivic {

using Integer = mpz_class;
using Rational = mpq_class;

/// Sparse Laurent polynomial in a single symbol (the Lefschetz class L for
/// motivic classes, q inside rational functions).
///
/// Terms are kept in a map from exponent to coefficient and zero coefficients
/// are never stored, so two equal polynomials always have identical term maps.
template <class Scalar>
class Laurent {
public:
    using Exponent = std::int64_t;
    using Terms = std::map<Exponent, Scalar>;

    Laurent() = default;
    Laurent(long constant) { set(0, Scalar(constant)); }
    Laurent(const Scalar& constant) { set(0, constant); }

    static Laurent monomial(const Scalar& c, Exponent e)
    {
        Laurent out;
        out.set(e, c);
        return out;
    }

    /// Builds from (exponent, coefficient) pairs; repeated exponents add up.
    template <class Range>
    static Laurent from_terms(const Range& pairs)
    {
        Laurent out;
        for (const auto& [e, c] : pairs) {
            out.add_to(e, Scalar(c));
        }
        return out;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Scalar coefficient(Exponent e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    std::optional<Exponent> min_exponent() const
    {
        if (terms_.empty()) {
            return std::nullopt;
        }
        return terms_.begin()->first;
    }

    std::optional<Exponent> max_exponent() const
    {
        if (terms_.empty()) {
            return std::nullopt;
        }
        return terms_.rbegin()->first;
    }

    /// True when no negative powers occur (the zero polynomial included).
    bool is_polynomial() const { return terms_.empty() || terms_.begin()->first >= 0; }

    bool has_nonnegative_coefficients() const
    {
        for (const auto& [e, c] : terms_) {
            if (sgn(c) < 0) {
                return false;
            }
        }
        return true;
    }

    /// Units of Z[L^{+-1}] (and Q[L^{+-1}]) are the nonzero scalar multiples of a
    /// single power of L; with integer scalars the multiple must be +-1.
    bool is_unit() const
    {
        if (terms_.size() != 1) {
            return false;
        }
        const Scalar& c = terms_.begin()->second;
        if constexpr (std::is_same_v<Scalar, Integer>) {
            return c == 1 || c == -1;
        } else {
            return sgn(c) != 0;
        }
    }

    Laurent unit_inverse() const
    {
        require(is_unit(), "Laurent polynomial " + to_string() + " is not a unit");
        const auto& [e, c] = *terms_.begin();
        if constexpr (std::is_same_v<Scalar, Integer>) {
            return monomial(c, -e);
        } else {
            return monomial(Scalar(1) / c, -e);
        }
    }

    /// Multiplies by L^k.
    Laurent shifted(Exponent k) const
    {
        Laurent out;
        for (const auto& [e, c] : terms_) {
            out.terms_.emplace_hint(out.terms_.end(), e + k, c);
        }
        return out;
    }

    /// Substitutes L -> L^k. For k >= 1 this is the Adams operation psi_k on the
    /// coefficient ring; k = -1 is the duality involution.
    Laurent substitute_power(Exponent k) const
    {
        Laurent out;
        for (const auto& [e, c] : terms_) {
            out.add_to(e * k, c);
        }
        return out;
    }

    Laurent& operator+=(const Laurent& o)
    {
        for (const auto& [e, c] : o.terms_) {
            add_to(e, c);
        }
        return *this;
    }

    Laurent& operator-=(const Laurent& o)
    {
        for (const auto& [e, c] : o.terms_) {
            add_to(e, Scalar(-c));
        }
        return *this;
    }

    Laurent& operator*=(const Laurent& o)
    {
        *this = *this * o;
        return *this;
    }

    Laurent& operator*=(const Scalar& s)
    {
        if (sgn(s) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) {
            c *= s;
        }
        return *this;
    }

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(Laurent a, const Scalar& s) { return a *= s; }
    friend Laurent operator*(const Scalar& s, Laurent a) { return a *= s; }
    friend Laurent operator*(Laurent a, long s) { return a *= Scalar(s); }
    friend Laurent operator*(long s, Laurent a) { return a *= Scalar(s); }

    friend Laurent operator-(Laurent a)
    {
        for (auto& [e, c] : a.terms_) {
            c = -c;
        }
        return a;
    }

    friend Laurent operator*(const Laurent& a, const Laurent& b)
    {
        Laurent out;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                out.add_to(ea + eb, Scalar(ca * cb));
            }
        }
        return out;
    }

    friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    Laurent pow(unsigned k) const
    {
        Laurent out(1L);
        Laurent base = *this;
        while (k > 0) {
            if (k & 1U) {
                out *= base;
            }
            k >>= 1U;
            if (k > 0) {
                base *= base;
            }
        }
        return out;
    }

    /// Human-readable form, highest power first, e.g. "L^4 + L^3 - 2*L^-1".
    std::string to_string(const std::string& symbol = "L") const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Scalar mag = abs(c);
            const bool negative = sgn(c) < 0;
            if (first) {
                out += negative ? "-" : "";
            } else {
                out += negative ? " - " : " + ";
            }
            first = false;
            const bool unit_mag = (mag == 1);
            if (e == 0) {
                out += mag.get_str();
                continue;
            }
            if (!unit_mag) {
                out += mag.get_str() + "*";
            }
            out += symbol;
            if (e != 1) {
                out += "^" + std::to_string(e);
            }
        }
        return out;
    }

private:
    void set(Exponent e, const Scalar& c)
    {
        if (sgn(c) == 0) {
            terms_.erase(e);
        } else {
            terms_[e] = c;
        }
    }

    void add_to(Exponent e, const Scalar& c)
    {
        if (sgn(c) == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) {
                terms_.erase(it);
            }
        }
    }

    Terms terms_;
};

/// Motivic classes: integer Laurent polynomials in L.
using LaurentPoly = Laurent<Integer>;
/// Rational-coefficient Laurent polynomials; intermediate ring for exp/log.
using QLaurent = Laurent<Rational>;

/// [A^d] = L^d.
LaurentPoly affine_class(int d);

/// [P^d] = 1 + L + ... + L^d, with [P^-1] = 0 (the empty variety).
LaurentPoly projective_class(int d);

/// Duality involution L -> L^-1, a ring homomorphism.
LaurentPoly dual(const LaurentPoly& f);

/// Exact evaluation at L = q. Throws PreconditionError for q = 0 when negative
/// exponents are present.
Rational eval(const LaurentPoly& f, const Rational& q);

QLaurent to_rational(const LaurentPoly& f);

/// Converts back to integer coefficients; throws InvariantViolation if some
/// coefficient is not an integer.
LaurentPoly to_integral(const QLaurent& f);

/// Parses expressions such as "1+L+L^2", "3*L^-1 - 2", "L^2*5" or "2L".
LaurentPoly parse_laurent(const std::string& text, char symbol = 'L');

} // namespace motivic
