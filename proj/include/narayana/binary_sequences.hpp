#pragma once

// Binary sequences derived from periods over successive primes:
// B(n) over {+1,-1} from the period class, C(n) over {0,1} from the period
// parity (even -> 1). Correlation operates on the bipolar alphabet only, so
// C(n) must be converted explicitly with to_bipolar.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace narayana {

struct BitSequence {
    std::vector<std::uint8_t> values;  // each 0 or 1
    std::size_t size() const { return values.size(); }
    bool operator==(const BitSequence&) const = default;
};

struct BipolarSequence {
    std::vector<int> values;  // each +1 or -1
    std::size_t size() const { return values.size(); }
    bool operator==(const BipolarSequence&) const = default;
};

/// Element i is +1 if the i-th prime (counting from starting_prime) has a
/// minus-type period, -1 for plus-type. Throws std::domain_error naming the
/// prime when neither sign can be assigned.
BipolarSequence b_sequence(std::size_t num_primes, std::uint64_t starting_prime = 3);

/// Element i is 1 if the i-th prime's period is even, 0 if odd.
BitSequence c_sequence(std::size_t num_primes, std::uint64_t starting_prime = 3);

/// 1 -> +1, 0 -> -1, order preserved.
BipolarSequence to_bipolar(const BitSequence& bits);

}  // namespace narayana
