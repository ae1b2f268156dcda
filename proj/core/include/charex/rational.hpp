#pragma once

#include <charex/errors.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace charex {

using BigInt = boost::multiprecision::cpp_int;

// Exact fraction of arbitrary-precision integers. Canonical form (reduced,
// denominator > 0) holds after every operation; the heavy lifting is done by
// the Boost.Multiprecision rational backend, this type pins down the exact
// surface the rest of the toolkit relies on: integer-exponent powers, sign
// queries, the "p/q" serialization, and validated parsing.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    explicit Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den.is_zero()) throw ValidationError("Rational: zero denominator");
        v_ = boost::multiprecision::cpp_rational(num);
        v_ /= boost::multiprecision::cpp_rational(den);
    }
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    // Accepts "p", "-p", "p/q" with decimal digits only; anything else
    // (floats in particular) is a ParseError.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    int sign() const { return v_.sign(); }
    bool is_positive() const { return sign() > 0; }
    bool is_negative() const { return sign() < 0; }

    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw ValidationError("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // Exact integer power; negative exponents require a nonzero base.
    Rational pow(long long e) const;

    Rational abs() const { return is_negative() ? -*this : *this; }
    Rational inverse() const {
        if (is_zero()) throw ValidationError("Rational: inverse of zero");
        return Rational(1) / *this;
    }

    double to_double() const { return static_cast<double>(v_); }

    // Canonical serialization: "p/q", or "p" when q = 1; sign on the numerator.
    std::string str() const { return v_.str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.v_;
    }

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
    boost::multiprecision::cpp_rational v_;
};

inline Rational Rational::pow(long long e) const {
    if (e == 0) return Rational(1);
    if (e < 0) return inverse().pow(-e);
    const unsigned exp = static_cast<unsigned>(e);
    const BigInt n = boost::multiprecision::pow(numerator(), exp);
    const BigInt d = boost::multiprecision::pow(denominator(), exp);
    return Rational(n, d);
}

inline Rational Rational::parse(std::string_view text) {
    const auto bad = [&](const char* why) -> ParseError {
        return ParseError(std::string("ParseError: '") + std::string(text) + "': " + why);
    };
    std::string_view s = text;
    if (s.empty()) throw bad("empty");
    std::string_view num = s;
    std::string_view den;
    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
        if (den.empty()) throw bad("missing denominator");
        if (den.find('/') != std::string_view::npos) throw bad("multiple '/'");
    }
    const auto check_digits = [&](std::string_view part, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
        if (i == part.size()) throw bad("missing digits");
        for (; i < part.size(); ++i) {
            if (part[i] < '0' || part[i] > '9')
                throw bad("expected an integer or integer/integer (floats are rejected)");
        }
    };
    check_digits(num, true);
    if (!den.empty()) check_digits(den, false);
    const BigInt n(std::string(num));
    const BigInt d = den.empty() ? BigInt(1) : BigInt(std::string(den));
    if (d.is_zero()) throw bad("zero denominator");
    return Rational(n, d);
}

}  // namespace charex
