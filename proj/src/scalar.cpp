#include "polyadic/scalar.hpp"

#include <cctype>

namespace polyadic {

Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarArith kind) {
    switch (kind) {
        case ScalarArith::add: return a + b;
        case ScalarArith::sub: return a - b;
        case ScalarArith::mul: return a * b;
        case ScalarArith::div: return a / b;
    }
    throw std::logic_error("bad arith kind");
}

std::string rational_format(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
};

// One signed term: [+|-] (digits [/digits] ["i"] | "i").
// Returns the rational magnitude and whether the term was imaginary.
Rational parse_term(Cursor& c, bool& imaginary) {
    int sign = 1;
    if (c.peek() == '+' || c.peek() == '-') {
        if (c.text[c.pos] == '-') sign = -1;
        ++c.pos;
    }
    c.skip_ws();
    imaginary = false;
    BigInt num, den = 1;
    if (c.peek() == 'i') {
        ++c.pos;
        imaginary = true;
        num = 1;
    } else {
        std::size_t start = c.pos;
        while (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos]))) ++c.pos;
        if (c.pos == start) throw ScalarParseError("expected digits or 'i'", c.pos);
        num = BigInt(c.text.substr(start, c.pos - start));
        if (c.peek() == '/') {
            ++c.pos;
            c.skip_ws();
            std::size_t dstart = c.pos;
            while (c.pos < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[c.pos]))) ++c.pos;
            if (c.pos == dstart) throw ScalarParseError("expected denominator digits", c.pos);
            den = BigInt(c.text.substr(dstart, c.pos - dstart));
            if (den == 0) throw DivisionByZero();
        }
        if (c.peek() == 'i') {
            ++c.pos;
            imaginary = true;
        }
    }
    Rational r(num, den);
    if (sign < 0) r = -r;
    return r;
}

}  // namespace

Scalar scalar_parse(const std::string& text) {
    Cursor c{text};
    if (c.done()) throw ScalarParseError("empty scalar", 0);
    bool imag1 = false;
    Rational first = parse_term(c, imag1);
    Rational re = 0, im = 0;
    (imag1 ? im : re) = first;
    if (!c.done()) {
        if (c.peek() != '+' && c.peek() != '-')
            throw ScalarParseError("expected '+', '-' or end", c.pos);
        bool imag2 = false;
        Rational second = parse_term(c, imag2);
        if (imag2 == imag1) throw ScalarParseError("duplicate real or imaginary part", c.pos);
        (imag2 ? im : re) = second;
        if (!c.done()) throw ScalarParseError("trailing characters", c.pos);
    }
    return Scalar(re, im);
}

std::string scalar_format(const Scalar& s) {
    if (s.is_zero()) return "0";
    std::string out;
    if (s.re() != 0) out = rational_format(s.re());
    if (s.im() != 0) {
        std::string im = rational_format(s.im());
        if (!out.empty() && im[0] != '-') out += "+";
        out += im + " i";
    }
    return out;
}

}  // namespace polyadic
