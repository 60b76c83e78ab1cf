#pragma once

#include <complex>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace storsion {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parseRational(const std::string& text);
std::string toString(const Rational& r);

/// Exact Gaussian rational re + i*im.
class ComplexRational {
public:
    ComplexRational() = default;
    ComplexRational(const Rational& re) : re_(re) {}  // NOLINT: implicit lift
    ComplexRational(const Rational& re, const Rational& im) : re_(re), im_(im) {}
    ComplexRational(long re) : re_(re) {}  // NOLINT
    ComplexRational(int re) : re_(re) {}   // NOLINT

    static ComplexRational i() { return {0, 1}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool isZero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    ComplexRational conj() const { return {re_, -im_}; }
    /// |z|^2, exact.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    ComplexRational& operator+=(const ComplexRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    ComplexRational& operator-=(const ComplexRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    ComplexRational& operator*=(const ComplexRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = r;
        return *this;
    }
    ComplexRational& operator/=(const ComplexRational& o);

    friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
    friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
    friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
    friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
    friend ComplexRational operator-(const ComplexRational& a) { return {-a.re_, -a.im_}; }
    friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const ComplexRational& a, const ComplexRational& b) { return !(a == b); }

    std::complex<double> toComplex() const { return {re_.get_d(), im_.get_d()}; }
    std::string str() const;

private:
    Rational re_{0};
    Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const ComplexRational& z);

/// Parses "a", "a+bi", "a-bi", "bi", "i", with rational a, b ("1/2+3/4i").
ComplexRational parseComplexRational(const std::string& text);

/// i^k for any integer k.
ComplexRational powerOfI(int k);

inline bool isZero(const ComplexRational& z) { return z.isZero(); }
inline ComplexRational coefficientTrace(const ComplexRational& z) { return z; }
inline ComplexRational adjoint(const ComplexRational& z) { return z.conj(); }
inline bool isIdentity(const ComplexRational& z) { return z == ComplexRational(1); }

}  // namespace storsion
