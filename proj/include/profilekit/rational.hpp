#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "profilekit/error.hpp"

namespace profilekit {

// Exact rational on int64 with normalized sign and gcd. Comparisons go
// through 128-bit intermediates, so squared-distance tests never flip from
// rounding.
class Rational {
public:
    Rational() = default;
    Rational(long long value) : num_(value), den_(1) {} // NOLINT(google-explicit-constructor)
    Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    Rational operator+(const Rational & o) const { return {num_ * o.den_ + o.num_ * den_, den_ * o.den_}; }
    Rational operator-(const Rational & o) const { return {num_ * o.den_ - o.num_ * den_, den_ * o.den_}; }
    Rational operator*(const Rational & o) const { return {num_ * o.num_, den_ * o.den_}; }
    Rational operator/(const Rational & o) const
    {
        if (o.num_ == 0)
            throw InputError("division by zero rational");
        return {num_ * o.den_, den_ * o.num_};
    }

    bool operator==(const Rational & o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational & o) const { return !(*this == o); }
    bool operator<(const Rational & o) const
    {
        return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
    }
    bool operator<=(const Rational & o) const { return !(o < *this); }
    bool operator>(const Rational & o) const { return o < *this; }
    bool operator>=(const Rational & o) const { return !(*this < o); }

    std::string str() const
    {
        if (den_ == 1)
            return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts integers, fractions ("3/4", "-7/2") and finite decimals
    // ("0.5", "-1.25").
    static Rational parse(const std::string & text);

private:
    void normalize()
    {
        if (den_ == 0)
            throw InputError("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    long long num_ = 0;
    long long den_ = 1;
};

} // namespace profilekit
