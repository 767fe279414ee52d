#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>

#include "fourstab/errors.hpp"

namespace fourstab {

using Int = std::int64_t;

// Overflow-checked 64-bit operations. All arithmetic in the library is
// exact; on overflow we throw instead of returning a wrapped value.

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw ArithmeticOverflow("integer addition overflows 64 bits");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw ArithmeticOverflow("integer subtraction overflows 64 bits");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ArithmeticOverflow("integer multiplication overflows 64 bits");
    return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

// Quotient of an exact division; throws if b does not divide a.
inline Int exact_div(Int a, Int b) {
    if (b == 0 || a % b != 0)
        throw InternalDivisibility("exact division failed: " + std::to_string(a) + " / " + std::to_string(b));
    return a / b;
}

inline int sign_of(Int a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); }

// Exact rational number over checked 64-bit integers, always stored reduced
// with a positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(Int n) : num_(n), den_(1) {}
    Rational(Int n, Int d) : num_(n), den_(d) { reduce(); }

    Int num() const { return num_; }
    Int den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return sign_of(num_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(checked_add(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                        checked_mul(a.den_, b.den_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(checked_sub(checked_mul(a.num_, b.den_), checked_mul(b.num_, a.den_)),
                        checked_mul(a.den_, b.den_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(checked_mul(a.num_, b.num_), checked_mul(a.den_, b.den_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw ArithmeticOverflow("rational division by zero");
        return Rational(checked_mul(a.num_, b.den_), checked_mul(a.den_, b.num_));
    }
    Rational operator-() const { return Rational(checked_neg(num_), den_); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        os << r.num_;
        if (r.den_ != 1) os << '/' << r.den_;
        return os;
    }

private:
    void reduce() {
        if (den_ == 0) throw ArithmeticOverflow("rational with zero denominator");
        if (den_ < 0) {
            num_ = checked_neg(num_);
            den_ = checked_neg(den_);
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (num_ == std::numeric_limits<Int>::min())
            throw ArithmeticOverflow("rational numerator out of range");
        Int g = std::gcd(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    Int num_;
    Int den_;
};

}  // namespace fourstab
