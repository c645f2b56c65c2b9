#include "motivic/laurent.hpp"

#include <cctype>

namespace motivic {

LaurentPoly affine_class(int d)
{
    require(d >= 0, "affine_class: dimension must be non-negative");
    return LaurentPoly::monomial(Integer(1), d);
}

LaurentPoly projective_class(int d)
{
    require(d >= -1, "projective_class: dimension must be >= -1");
    LaurentPoly out;
    for (int k = 0; k <= d; ++k) {
        out += LaurentPoly::monomial(Integer(1), k);
    }
    return out;
}

LaurentPoly dual(const LaurentPoly& f)
{
    return f.substitute_power(-1);
}

Rational eval(const LaurentPoly& f, const Rational& q)
{
    if (sgn(q) == 0) {
        require(f.is_polynomial(), "eval: L=0 with negative exponents present");
        return Rational(f.coefficient(0));
    }
    Rational out = 0;
    for (const auto& [e, c] : f.terms()) {
        Rational power = 1;
        Rational base = e >= 0 ? q : Rational(1) / q;
        for (auto k = e >= 0 ? e : -e; k > 0; --k) {
            power *= base;
        }
        out += Rational(c) * power;
    }
    out.canonicalize();
    return out;
}

QLaurent to_rational(const LaurentPoly& f)
{
    QLaurent out;
    for (const auto& [e, c] : f.terms()) {
        out += QLaurent::monomial(Rational(c), e);
    }
    return out;
}

LaurentPoly to_integral(const QLaurent& f)
{
    LaurentPoly out;
    for (const auto& [e, c] : f.terms()) {
        ensure(c.get_den() == 1,
               "non-integral coefficient " + c.get_str() + " at exponent " + std::to_string(e));
        out += LaurentPoly::monomial(c.get_num(), e);
    }
    return out;
}

namespace {

class LaurentParser {
public:
    LaurentParser(const std::string& text, char symbol) : text_(text), symbol_(symbol) {}

    LaurentPoly parse()
    {
        LaurentPoly out;
        skip_space();
        if (at_end()) {
            fail("empty expression");
        }
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_space();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            out += term() * Integer(sign);
            skip_space();
        }
        return out;
    }

private:
    // term := factor ('*'? factor)*
    LaurentPoly term()
    {
        LaurentPoly out = factor();
        for (;;) {
            skip_space();
            if (at_end() || peek() == '+' || peek() == '-') {
                return out;
            }
            if (peek() == '*') {
                ++pos_;
                skip_space();
            }
            out *= factor();
        }
    }

    LaurentPoly factor()
    {
        if (at_end()) {
            fail("unexpected end of expression");
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            return LaurentPoly(Integer(digits()));
        }
        if (peek() == symbol_) {
            ++pos_;
            skip_space();
            long e = 1;
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_space();
                int sign = 1;
                if (!at_end() && (peek() == '-' || peek() == '+')) {
                    sign = peek() == '-' ? -1 : 1;
                    ++pos_;
                }
                if (!at_end() && peek() == '(') {
                    ++pos_;
                    if (!at_end() && (peek() == '-' || peek() == '+')) {
                        sign *= peek() == '-' ? -1 : 1;
                        ++pos_;
                    }
                    e = sign * std::stol(digits());
                    expect(')');
                } else {
                    e = sign * std::stol(digits());
                }
            }
            return LaurentPoly::monomial(Integer(1), e);
        }
        fail(std::string("unexpected character '") + peek() + "'");
    }

    std::string digits()
    {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected digits");
        }
        return text_.substr(start, pos_ - start);
    }

    void expect(char c)
    {
        if (at_end() || peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    [[noreturn]] void fail(const std::string& why) const
    {
        throw PreconditionError("cannot parse '" + text_ + "' at offset " + std::to_string(pos_) +
                                ": " + why);
    }

    const std::string& text_;
    char symbol_;
    std::size_t pos_ = 0;
};

} // namespace

LaurentPoly parse_laurent(const std::string& text, char symbol)
{
    return LaurentParser(text, symbol).parse();
}

} // namespace motivic
