#pragma once

// Minimal unsigned arbitrary-precision integer: addition, comparison, and
// small multiply/divide. Enough for exact recurrence terms and binomial
// products; deliberately not a general bignum.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace narayana {

class BigUint {
public:
    BigUint() = default;
    BigUint(std::uint64_t value);

    BigUint& operator+=(const BigUint& rhs);
    friend BigUint operator+(BigUint lhs, const BigUint& rhs) {
        lhs += rhs;
        return lhs;
    }

    /// Multiply in place by a machine word.
    BigUint& operator*=(std::uint32_t factor);

    /// Divide in place by a nonzero machine word; returns the remainder.
    std::uint32_t div_small(std::uint32_t divisor);

    bool operator==(const BigUint&) const = default;
    std::strong_ordering operator<=>(const BigUint& rhs) const;

    bool is_zero() const { return limbs_.empty(); }
    bool fits_u64() const { return limbs_.size() <= 2; }
    std::uint64_t to_u64() const;  // throws std::overflow_error if too wide
    std::uint64_t mod_u64(std::uint64_t modulus) const;
    std::string to_string() const;

private:
    // Base 2^32, little endian, no trailing zero limbs; empty means zero.
    std::vector<std::uint32_t> limbs_;
    void trim();
};

}  // namespace narayana
