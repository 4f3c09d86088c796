#pragma once
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <utility>

namespace symplex {

using Rational = mpq_class;  // always canonical: lowest terms, positive denominator

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational rational(long num, long den = 1) {
    if (den == 0) throw Error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Gaussian rational: element of Q(i).
struct Scalar {
    Rational re, im;

    Scalar() : re(0), im(0) {}
    Scalar(long v) : re(v), im(0) {}
    Scalar(Rational r) : re(std::move(r)), im(0) {}
    Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Scalar i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    Scalar conj() const { return {re, Rational(-im)}; }

    Scalar operator-() const { return {Rational(-re), Rational(-im)}; }
    Scalar& operator+=(const Scalar& o) { re += o.re; im += o.im; return *this; }
    Scalar& operator-=(const Scalar& o) { re -= o.re; im -= o.im; return *this; }
    Scalar& operator*=(const Scalar& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    Scalar inverse() const {
        if (is_zero()) throw Error("division by zero");
        Rational n = re * re + im * im;
        return {Rational(re / n), Rational(-im / n)};
    }
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string str() const;
};

std::string rational_str(const Rational& r);
// Parses "p", "p/q", "1/2"; throws Error on bad input.
Rational parse_rational(const std::string& text);

}  // namespace symplex
