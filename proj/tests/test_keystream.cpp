#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "narayana/keystream.hpp"
#include "narayana/narayana_core.hpp"
#include "narayana/period_analysis.hpp"

using namespace narayana;

namespace {

KeystreamConfig make_config(std::uint64_t p, std::uint64_t a, std::uint64_t b, std::uint64_t c,
                            std::uint64_t bits, ExtractionRule rule) {
    KeystreamConfig config;
    config.prime = p;
    config.seed = NarayanaTriple(a, b, c, p);
    config.bits = bits;
    config.rule = rule;
    return config;
}

}  // namespace

TEST_CASE("parity-with-rejection stream for p=3") {
    // Residues 1,1,1,2,0,1,0,0,1 with the single 2 (= p-1) rejected.
    const auto stream = generate_keystream(
        make_config(3, 1, 1, 1, 8, ExtractionRule::parity_with_rejection));
    CHECK(stream.values == std::vector<std::uint8_t>{1, 1, 1, 0, 1, 0, 0, 1});
}

TEST_CASE("threshold stream for p=5") {
    // Residues 1,1,1,2 all below (p+1)/2 = 3.
    const auto stream =
        generate_keystream(make_config(5, 1, 1, 1, 4, ExtractionRule::threshold));
    CHECK(stream.values == std::vector<std::uint8_t>{0, 0, 0, 0});
    // One more step reaches residue 3 which crosses the threshold.
    const auto longer =
        generate_keystream(make_config(5, 1, 1, 1, 6, ExtractionRule::threshold));
    CHECK(longer.values == std::vector<std::uint8_t>{0, 0, 0, 0, 1, 1});
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS((void)generate_keystream(
                        make_config(3, 0, 0, 0, 4, ExtractionRule::parity_with_rejection)),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)generate_keystream(
                        make_config(5, 1, 1, 1, 0, ExtractionRule::parity_with_rejection)),
                    std::invalid_argument);
    KeystreamConfig bad = make_config(5, 1, 1, 1, 4, ExtractionRule::threshold);
    bad.prime = 4;  // seed modulus no longer matches, and 4 is not prime
    CHECK_THROWS_AS((void)generate_keystream(bad), std::invalid_argument);
    KeystreamConfig two = make_config(2, 1, 1, 1, 4, ExtractionRule::threshold);
    CHECK_THROWS_AS((void)generate_keystream(two), std::invalid_argument);
    KeystreamConfig mismatched = make_config(7, 1, 1, 1, 4, ExtractionRule::threshold);
    mismatched.prime = 5;
    CHECK_THROWS_AS((void)generate_keystream(mismatched), std::invalid_argument);
}

TEST_CASE("stream length and determinism") {
    const auto config = make_config(11, 2, 5, 7, 200, ExtractionRule::parity_with_rejection);
    const auto first = generate_keystream(config);
    const auto second = generate_keystream(config);
    CHECK(first.size() == 200);
    CHECK(first == second);
}

TEST_CASE("no emitted bit derives from residue p-1") {
    for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull}) {
        KeystreamGenerator gen(
            make_config(p, 1, 1, 1, 1, ExtractionRule::parity_with_rejection));
        const std::uint64_t period = period_mod_p(p);
        for (std::uint64_t i = 0; i < period; ++i) {
            (void)gen.next_bit();
            CHECK(gen.last_residue() != p - 1);
        }
    }
}

TEST_CASE("seeds on one orbit give rotated residue streams") {
    const NarayanaTriple seed = NarayanaTriple::canonical(7);
    const NarayanaTriple shifted = seed.step();
    const auto stream_a = sequence_mod(seed, 40);
    const auto stream_b = sequence_mod(shifted, 39);
    for (std::size_t i = 0; i < stream_b.size(); ++i) CHECK(stream_b[i] == stream_a[i + 1]);
}

TEST_CASE("health report flags exhaustion") {
    const auto tight = keystream_health_report(
        make_config(3, 1, 1, 1, 8, ExtractionRule::parity_with_rejection));
    CHECK(tight.period == 8);
    CHECK(tight.residues_consumed == 9);  // one rejection lengthens consumption
    CHECK(tight.period_fraction > 1.0);
    CHECK(tight.exhaustion_warning);

    const auto roomy = keystream_health_report(
        make_config(251, 1, 1, 1, 1000, ExtractionRule::parity_with_rejection));
    CHECK(roomy.period == 63000);
    CHECK(roomy.period_fraction < 0.02);
    CHECK_FALSE(roomy.exhaustion_warning);
    CHECK(roomy.randomness > 0.0);
    CHECK(roomy.randomness <= 1.0);

    CHECK_THROWS_AS((void)keystream_health_report(
                        make_config(5, 1, 1, 1, 0, ExtractionRule::parity_with_rejection)),
                    std::invalid_argument);
}

TEST_CASE("health bias matches the emitted stream") {
    const auto config = make_config(13, 1, 1, 1, 64, ExtractionRule::threshold);
    const auto stream = generate_keystream(config);
    std::size_t ones = 0;
    for (auto bit : stream.values) ones += bit;
    const auto health = keystream_health_report(config);
    CHECK(health.bit_bias ==
          doctest::Approx(static_cast<double>(ones) / 64.0 - 0.5).epsilon(1e-12));
}
