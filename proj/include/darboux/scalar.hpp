#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace darboux {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
bool is_integer(const Rational& r);
Rational frac_part(const Rational& r);  // in [0, 1)
Integer floor_of(const Rational& r);
Integer ceil_of(const Rational& r);

// a + b*w with w^2 + w + 1 = 0. Every coefficient of every object in the
// library lives here; b == 0 is the rational case and takes the fast paths.
class Scalar {
public:
    Scalar() = default;
    Scalar(int v) : re_(v) {}
    Scalar(long v) : re_(v) {}
    Scalar(const Rational& r) : re_(r) {}
    Scalar(const Integer& z) : re_(z) {}
    Scalar(Rational a, Rational b) : re_(std::move(a)), om_(std::move(b)) {}

    static Scalar omega() { return Scalar(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& om() const { return om_; }

    bool is_rational() const { return sgn(om_) == 0; }
    bool is_zero() const { return sgn(re_) == 0 && sgn(om_) == 0; }
    bool is_one() const { return is_rational() && re_ == 1; }

    // Galois conjugate w -> w^2 = -1 - w.
    Scalar conj() const { return Scalar(re_ - om_, -om_); }
    // Field norm a^2 - ab + b^2.
    Rational norm() const;
    Scalar inverse() const;
    Scalar pow(long e) const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar operator-() const { return Scalar(-re_, -om_); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.om_ == b.om_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // "3/4", "-2*w", "1/2+3*w"
    std::string str() const;
    static Scalar parse(std::string_view text);

private:
    Rational re_;
    Rational om_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace darboux
