#include "vcmax/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace vcmax {

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::from_double(double v) {
    if (!std::isfinite(v)) throw InvalidInputError("cannot convert non-finite double to rational");
    if (v == 0.0) return Rational();
    int exp = 0;
    double mant = std::frexp(v, &exp);  // v = mant * 2^exp, |mant| in [0.5, 1)
    // 53 shifts bring the mantissa to an integer exactly.
    auto scaled = static_cast<long long>(std::ldexp(mant, 53));
    exp -= 53;
    BigInt num(scaled);
    BigInt den(1);
    if (exp >= 0) {
        num <<= exp;
    } else {
        den <<= -exp;
    }
    return Rational(std::move(num), std::move(den));
}

Rational Rational::parse(std::string_view text) {
    std::size_t pos = 0;
    auto fail = [&](const std::string& msg) -> Rational { throw ParseError(msg, pos + 1); };

    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_digits = [&]() -> std::string {
        std::string out;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) out.push_back(text[pos++]);
        return out;
    };

    skip_ws();
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    std::string integral = read_digits();
    std::string fractional;
    BigInt den = 1;

    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        fractional = read_digits();
        if (integral.empty() && fractional.empty()) return fail("expected digits in number");
        for (std::size_t i = 0; i < fractional.size(); ++i) den *= 10;
    } else if (pos < text.size() && text[pos] == '/') {
        if (integral.empty()) return fail("expected numerator before '/'");
        ++pos;
        skip_ws();
        bool den_negative = false;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            den_negative = text[pos] == '-';
            ++pos;
        }
        std::string den_digits = read_digits();
        if (den_digits.empty()) return fail("expected denominator after '/'");
        skip_ws();
        if (pos != text.size()) return fail("trailing characters after rational");
        BigInt n(integral);
        BigInt d(den_digits);
        if (negative) n = -n;
        if (den_negative) d = -d;
        if (d == 0) return fail("zero denominator");
        return Rational(std::move(n), std::move(d));
    }

    if (integral.empty() && fractional.empty()) return fail("expected digits in number");
    skip_ws();
    if (pos != text.size()) return fail("trailing characters after number");

    BigInt n(integral.empty() ? std::string("0") : integral);
    for (std::size_t i = 0; i < fractional.size(); ++i) n *= 10;
    if (!fractional.empty()) n += BigInt(fractional);
    if (negative) n = -n;
    return Rational(std::move(n), std::move(den));
}

Rational Rational::pow(unsigned exponent) const {
    Rational result(1);
    Rational base = *this;
    unsigned e = exponent;
    while (e > 0) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1u;
    }
    return result;
}

double Rational::to_double() const {
    // Scale into a window where the conversion keeps full double precision.
    if (num_ == 0) return 0.0;
    const long shift = static_cast<long>(boost::multiprecision::msb(boost::multiprecision::abs(num_))) -
                       static_cast<long>(boost::multiprecision::msb(den_));
    BigInt n = num_;
    BigInt d = den_;
    long e = 0;
    const long target = 64;
    if (shift < target) {
        n <<= (target - shift);
        e = -(target - shift);
    } else if (shift > target) {
        d <<= (shift - target);
        e = shift - target;
    }
    BigInt q = n / d;
    return std::ldexp(q.convert_to<double>(), static_cast<int>(e));
}

std::string Rational::str() const {
    std::string out = num_.str();
    if (den_ != 1) {
        out += "/";
        out += den_.str();
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace vcmax
