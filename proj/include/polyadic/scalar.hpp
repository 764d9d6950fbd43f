#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polyadic {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct ScalarParseError : std::runtime_error {
    std::size_t position;
    ScalarParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct DivisionByZero : std::runtime_error {
    DivisionByZero() : std::runtime_error("division by zero") {}
};

/// num/den with the sign normalized into the numerator.
inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw DivisionByZero();
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

/// Exact Gaussian rational re + im*i. Canonical form is maintained by
/// cpp_rational (gcd-reduced, positive denominator), so equality is structural.
class Scalar {
public:
    Scalar() = default;
    Scalar(Rational re) : re_(std::move(re)) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
    Scalar(long long re) : re_(re) {}
    Scalar(long long num, long long den) : re_(Rational(num, den)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        return Scalar(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        return Scalar(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend Scalar operator-(const Scalar& a) { return Scalar(-a.re_, -a.im_); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        return Scalar(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw DivisionByZero();
        Rational n = b.re_ * b.re_ + b.im_ * b.im_;
        return Scalar((a.re_ * b.re_ + a.im_ * b.im_) / n, (a.im_ * b.re_ - a.re_ * b.im_) / n);
    }
    Scalar& operator+=(const Scalar& b) { re_ += b.re_; im_ += b.im_; return *this; }
    Scalar& operator-=(const Scalar& b) { re_ -= b.re_; im_ -= b.im_; return *this; }
    Scalar& operator*=(const Scalar& b) { *this = *this * b; return *this; }

    Scalar inverse() const { return Scalar(Rational(1)) / *this; }

private:
    Rational re_{0};
    Rational im_{0};
};

enum class ScalarArith { add, sub, mul, div };

Scalar scalar_arith(const Scalar& a, const Scalar& b, ScalarArith kind);

/// Parses the scalar grammar `[±a/b][±c/d i]`; at least one part must be present.
Scalar scalar_parse(const std::string& text);

/// Canonical rendering; scalar_parse(scalar_format(s)) == s.
std::string scalar_format(const Scalar& s);

std::string rational_format(const Rational& r);

}  // namespace polyadic
