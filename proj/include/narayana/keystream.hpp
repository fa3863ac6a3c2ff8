#pragma once

// Demonstrative key-material generation from the Narayana recurrence modulo a
// prime. The residue stream starts with the three seed components and one
// candidate bit is extracted per residue:
//
//   parity_with_rejection: residue p-1 is discarded, otherwise bit = residue mod 2
//                          (the surviving alphabet {0..p-2} has equal even and
//                          odd counts)
//   threshold:             bit = 1 iff residue >= (p+1)/2
//
// This is a demonstration of the recurrence's reach, not a vetted cipher; the
// health report bounds a request against the orbit period.

#include <cstdint>

#include "narayana/binary_sequences.hpp"
#include "narayana/narayana_core.hpp"

namespace narayana {

enum class ExtractionRule { parity_with_rejection, threshold };

struct KeystreamConfig {
    std::uint64_t prime = 3;
    NarayanaTriple seed = NarayanaTriple::canonical(3);
    std::uint64_t bits = 1;
    ExtractionRule rule = ExtractionRule::parity_with_rejection;
};

/// Sequential bit source over one config. Instances are independent; a single
/// instance must not be advanced from two threads.
class KeystreamGenerator {
public:
    /// Validates the config: p prime and >= 3, seed nonzero with matching
    /// modulus, bits >= 1. Throws std::invalid_argument otherwise.
    explicit KeystreamGenerator(const KeystreamConfig& config);

    std::uint8_t next_bit();
    std::uint64_t residues_consumed() const { return consumed_; }
    std::uint64_t last_residue() const { return last_residue_; }

private:
    std::uint64_t next_residue();

    KeystreamConfig config_;
    NarayanaTriple state_;
    int seed_emitted_ = 0;
    std::uint64_t consumed_ = 0;
    std::uint64_t last_residue_ = 0;
};

BitSequence generate_keystream(const KeystreamConfig& config);

struct KeystreamHealth {
    std::uint64_t period = 0;             // orbit period of (1,1,1) mod p
    std::uint64_t residues_consumed = 0;  // includes rejected residues
    double period_fraction = 0.0;         // residues_consumed / period
    double bit_bias = 0.0;                // fraction of ones minus 1/2
    double randomness = 0.0;              // R of the bipolar-mapped stream (0 when bits < 2)
    bool exhaustion_warning = false;      // request cycled past one full period
};

KeystreamHealth keystream_health_report(const KeystreamConfig& config);

}  // namespace narayana
