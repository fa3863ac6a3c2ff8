#include "narayana/binary_sequences.hpp"

#include <stdexcept>
#include <string>

#include "narayana/period_analysis.hpp"

namespace narayana {

namespace {

std::vector<std::uint64_t> sequence_primes(std::size_t num_primes, std::uint64_t starting_prime) {
    if (num_primes == 0)
        throw std::invalid_argument("sequence construction: num_primes must be >= 1");
    if (!is_prime(starting_prime))
        throw std::invalid_argument("sequence construction: starting value " +
                                    std::to_string(starting_prime) + " is not prime");
    return next_primes(starting_prime, num_primes);
}

}  // namespace

BipolarSequence b_sequence(std::size_t num_primes, std::uint64_t starting_prime) {
    BipolarSequence out;
    out.values.reserve(num_primes);
    for (std::uint64_t p : sequence_primes(num_primes, starting_prime)) {
        out.values.push_back(bipolar_symbol(p, period_mod_p(p)));
    }
    return out;
}

BitSequence c_sequence(std::size_t num_primes, std::uint64_t starting_prime) {
    BitSequence out;
    out.values.reserve(num_primes);
    for (std::uint64_t p : sequence_primes(num_primes, starting_prime)) {
        out.values.push_back(period_mod_p(p) % 2 == 0 ? 1 : 0);
    }
    return out;
}

BipolarSequence to_bipolar(const BitSequence& bits) {
    BipolarSequence out;
    out.values.reserve(bits.values.size());
    for (std::uint8_t bit : bits.values) out.values.push_back(bit ? +1 : -1);
    return out;
}

}  // namespace narayana
