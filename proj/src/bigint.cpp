#include "profilekit/bigint.hpp"

#include <algorithm>

namespace profilekit {

namespace {
constexpr std::uint64_t kBase = 1'000'000'000ull;
}

BigInt::BigInt(unsigned long long value)
{
    while (value > 0) {
        limbs_.push_back(static_cast<std::uint32_t>(value % kBase));
        value /= kBase;
    }
}

void BigInt::trim()
{
    while (!limbs_.empty() && limbs_.back() == 0)
        limbs_.pop_back();
}

BigInt BigInt::operator+(const BigInt & o) const
{
    BigInt out;
    out.limbs_.resize(std::max(limbs_.size(), o.limbs_.size()) + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < out.limbs_.size(); ++i) {
        std::uint64_t sum = carry;
        if (i < limbs_.size())
            sum += limbs_[i];
        if (i < o.limbs_.size())
            sum += o.limbs_[i];
        out.limbs_[i] = static_cast<std::uint32_t>(sum % kBase);
        carry = sum / kBase;
    }
    out.trim();
    return out;
}

BigInt BigInt::operator-(const BigInt & o) const
{
    if (*this < o)
        throw InputError("big integer subtraction would go negative");
    BigInt out;
    out.limbs_ = limbs_;
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < out.limbs_.size(); ++i) {
        std::int64_t value = static_cast<std::int64_t>(out.limbs_[i]) - borrow -
                             (i < o.limbs_.size() ? static_cast<std::int64_t>(o.limbs_[i]) : 0);
        if (value < 0) {
            value += static_cast<std::int64_t>(kBase);
            borrow = 1;
        }
        else {
            borrow = 0;
        }
        out.limbs_[i] = static_cast<std::uint32_t>(value);
    }
    out.trim();
    return out;
}

BigInt BigInt::operator*(const BigInt & o) const
{
    if (is_zero() || o.is_zero())
        return {};
    if (limbs_.size() + o.limbs_.size() > kLimbCap)
        throw BudgetError("big integer product exceeds the size cap");
    BigInt out;
    out.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < o.limbs_.size() || carry; ++j) {
            std::uint64_t cur = out.limbs_[i + j] + carry;
            if (j < o.limbs_.size())
                cur += static_cast<std::uint64_t>(limbs_[i]) * o.limbs_[j];
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
    }
    out.trim();
    return out;
}

bool BigInt::operator<(const BigInt & o) const
{
    if (limbs_.size() != o.limbs_.size())
        return limbs_.size() < o.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;)
        if (limbs_[i] != o.limbs_[i])
            return limbs_[i] < o.limbs_[i];
    return false;
}

BigInt BigInt::pow(const BigInt & base, unsigned long long exponent)
{
    BigInt result(1);
    BigInt acc = base;
    while (exponent > 0) {
        if (exponent & 1ull)
            result = result * acc;
        exponent >>= 1;
        if (exponent > 0)
            acc = acc * acc;
    }
    return result;
}

BigInt BigInt::binomial(unsigned long long n, unsigned long long k)
{
    if (k > n)
        return {};
    k = std::min(k, n - k);
    // Product of exact fractions: numerator always divisible at each step.
    BigInt result(1);
    for (unsigned long long i = 1; i <= k; ++i) {
        result = result * BigInt(n - k + i);
        // Divide by small i via long division.
        BigInt quotient;
        std::uint64_t rem = 0;
        quotient.limbs_.assign(result.limbs_.size(), 0);
        for (std::size_t j = result.limbs_.size(); j-- > 0;) {
            std::uint64_t cur = rem * kBase + result.limbs_[j];
            quotient.limbs_[j] = static_cast<std::uint32_t>(cur / i);
            rem = cur % i;
        }
        quotient.trim();
        result = quotient;
    }
    return result;
}

std::string BigInt::str() const
{
    if (limbs_.empty())
        return "0";
    std::string out = std::to_string(limbs_.back());
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
        std::string part = std::to_string(limbs_[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

} // namespace profilekit
