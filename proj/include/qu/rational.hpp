// rational.hpp - exact rational arithmetic over 64-bit integers
//
// Always normalized: gcd(num, den) == 1 and den > 0. Integers convert
// implicitly, so counts and literals mix freely with weights.
#pragma once

#include <compare>
#include <numeric>
#include <ostream>
#include <string>

#include "qu/error.hpp"

namespace qu {

class Rational {
public:
    Rational() = default;
    Rational(long long value) : num_(value) {}  // NOLINT: implicit by design
    Rational(long long num, long long den) : num_(num), den_(den) {
        if (den_ == 0) throw DomainError("rational with zero denominator");
        normalize();
    }

    long long numerator() const { return num_; }
    long long denominator() const { return den_; }

    Rational operator-() const { return Rational(-num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw DomainError("rational division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& r) { return *this = *this + r; }
    Rational& operator-=(const Rational& r) { return *this = *this - r; }
    Rational& operator*=(const Rational& r) { return *this = *this * r; }
    Rational& operator/=(const Rational& r) { return *this = *this / r; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;  // denominators are positive
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        os << r.num_;
        if (r.den_ != 1) os << '/' << r.den_;
        return os;
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const long long g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    long long num_ = 0;
    long long den_ = 1;
};

// "7" for whole numbers, "7/2" otherwise.
inline std::string format_rational(const Rational& r) {
    std::string out = std::to_string(r.numerator());
    if (r.denominator() != 1) {
        out += '/';
        out += std::to_string(r.denominator());
    }
    return out;
}

}  // namespace qu
