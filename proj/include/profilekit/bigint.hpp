#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "profilekit/error.hpp"

namespace profilekit {

// Unsigned arbitrary-precision integer, base 1e9 limbs. Enough arithmetic
// for the explicit bound formulas: add, multiply, power, compare.
class BigInt {
public:
    BigInt() = default;
    BigInt(unsigned long long value); // NOLINT(google-explicit-constructor)

    static BigInt pow(const BigInt & base, unsigned long long exponent);
    static BigInt binomial(unsigned long long n, unsigned long long k);

    BigInt operator+(const BigInt & o) const;
    BigInt operator-(const BigInt & o) const; // requires *this >= o
    BigInt operator*(const BigInt & o) const;

    bool operator==(const BigInt & o) const { return limbs_ == o.limbs_; }
    bool operator!=(const BigInt & o) const { return !(*this == o); }
    bool operator<(const BigInt & o) const;
    bool operator<=(const BigInt & o) const { return !(o < *this); }
    bool operator>(const BigInt & o) const { return o < *this; }
    bool operator>=(const BigInt & o) const { return !(*this < o); }

    bool is_zero() const { return limbs_.empty(); }
    std::string str() const;

    // Guard against formulas whose value would not fit in memory.
    static constexpr std::size_t kLimbCap = 1u << 18; // ~2.3M digits

private:
    void trim();
    std::vector<std::uint32_t> limbs_; // little-endian, base 1e9; empty = 0
};

} // namespace profilekit
