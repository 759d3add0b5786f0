#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "vcmax/errors.hpp"

namespace vcmax {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational kept in canonical form: denominator > 0,
/// gcd(|numerator|, denominator) = 1, zero is 0/1.  All geometric predicates
/// in the library run on this type.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}                 // NOLINT(google-explicit-constructor)
    Rational(long long v) : num_(v), den_(1) {}           // NOLINT(google-explicit-constructor)
    Rational(BigInt v) : num_(std::move(v)), den_(1) {}   // NOLINT(google-explicit-constructor)

    Rational(BigInt numerator, BigInt denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_ == 0) throw InvalidInputError("rational with zero denominator");
        normalize();
    }

    /// Exact value of a finite double (every finite double is dyadic).
    static Rational from_double(double v);

    /// Accepts "p", "p/q", and decimal forms like "-0.25" (parsed exactly).
    static Rational parse(std::string_view text);

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw InvalidInputError("rational division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;  // canonical form makes this structural
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const BigInt lhs = a.num_ * b.den_;
        const BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational pow(unsigned exponent) const;
    Rational abs() const { return num_ < 0 ? -*this : *this; }

    double to_double() const;

    /// "p" when integral, "p/q" otherwise.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    void normalize();

    BigInt num_;
    BigInt den_;
};

}  // namespace vcmax
