#include "narayana/keystream.hpp"

#include <stdexcept>
#include <string>

#include "narayana/correlation.hpp"
#include "narayana/period_analysis.hpp"

namespace narayana {

KeystreamGenerator::KeystreamGenerator(const KeystreamConfig& config)
    : config_(config), state_(config.seed) {
    if (config.prime < 3 || !is_prime(config.prime))
        throw std::invalid_argument("keystream: modulus " + std::to_string(config.prime) +
                                    " is not an odd prime");
    if (config.seed.modulus != config.prime)
        throw std::invalid_argument("keystream: seed modulus does not match prime");
    if (config.seed.is_zero())
        throw std::invalid_argument("keystream: zero seed is a fixed point");
    if (config.bits == 0)
        throw std::invalid_argument("keystream: requested bits must be >= 1");
}

std::uint64_t KeystreamGenerator::next_residue() {
    std::uint64_t residue;
    switch (seed_emitted_) {
        case 0: residue = state_.a; ++seed_emitted_; break;
        case 1: residue = state_.b; ++seed_emitted_; break;
        case 2: residue = state_.c; ++seed_emitted_; break;
        default:
            state_ = state_.step();
            residue = state_.c;
            break;
    }
    ++consumed_;
    last_residue_ = residue;
    return residue;
}

std::uint8_t KeystreamGenerator::next_bit() {
    const std::uint64_t p = config_.prime;
    for (;;) {
        const std::uint64_t residue = next_residue();
        switch (config_.rule) {
            case ExtractionRule::parity_with_rejection:
                if (residue == p - 1) continue;
                return static_cast<std::uint8_t>(residue & 1);
            case ExtractionRule::threshold:
                return residue >= (p + 1) / 2 ? 1 : 0;
        }
    }
}

BitSequence generate_keystream(const KeystreamConfig& config) {
    KeystreamGenerator gen(config);
    BitSequence out;
    out.values.reserve(config.bits);
    for (std::uint64_t i = 0; i < config.bits; ++i) out.values.push_back(gen.next_bit());
    return out;
}

KeystreamHealth keystream_health_report(const KeystreamConfig& config) {
    KeystreamGenerator gen(config);
    BitSequence stream;
    stream.values.reserve(config.bits);
    std::uint64_t ones = 0;
    for (std::uint64_t i = 0; i < config.bits; ++i) {
        std::uint8_t bit = gen.next_bit();
        ones += bit;
        stream.values.push_back(bit);
    }

    KeystreamHealth health;
    health.period = period_mod_p(config.prime);
    health.residues_consumed = gen.residues_consumed();
    health.period_fraction = static_cast<double>(health.residues_consumed) /
                             static_cast<double>(health.period);
    health.bit_bias =
        static_cast<double>(ones) / static_cast<double>(config.bits) - 0.5;
    health.randomness =
        config.bits >= 2 ? randomness_measure(acf(to_bipolar(stream))) : 0.0;
    health.exhaustion_warning = health.residues_consumed > health.period;
    return health;
}

}  // namespace narayana
