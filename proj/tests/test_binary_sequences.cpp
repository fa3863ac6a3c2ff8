#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "narayana/binary_sequences.hpp"
#include "narayana/period_analysis.hpp"

using namespace narayana;

TEST_CASE("b_sequence fixed prefixes") {
    CHECK(b_sequence(4).values == std::vector<int>{+1, -1, -1, +1});
    CHECK(b_sequence(1).values == std::vector<int>{+1});
    // Includes the ramified prime 31 at index 9 (period 930, reduced order 30).
    CHECK(b_sequence(20).values ==
          std::vector<int>{1, -1, -1, 1, 1, 1, -1, 1, 1, 1, 1, -1, 1, 1, 1, -1, 1, 1, -1, 1});
}

TEST_CASE("c_sequence fixed prefixes") {
    CHECK(c_sequence(4).values == std::vector<std::uint8_t>{1, 0, 0, 1});
    CHECK(c_sequence(10).values == std::vector<std::uint8_t>{1, 0, 0, 1, 1, 1, 0, 1, 1, 1});
    CHECK(c_sequence(1, 5).values == std::vector<std::uint8_t>{0});
}

TEST_CASE("to_bipolar mapping") {
    CHECK(to_bipolar(BitSequence{{1, 0, 0, 1}}).values == std::vector<int>{+1, -1, -1, +1});
    CHECK(to_bipolar(BitSequence{}).values.empty());
    CHECK(to_bipolar(BitSequence{{0, 0, 0}}).values == std::vector<int>{-1, -1, -1});
}

TEST_CASE("to_bipolar round-trips through the inverse map") {
    const BitSequence bits{{1, 0, 1, 1, 0, 0, 1, 0}};
    const BipolarSequence bip = to_bipolar(bits);
    BitSequence back;
    for (int v : bip.values) back.values.push_back(v > 0 ? 1 : 0);
    CHECK(back == bits);
}

TEST_CASE("lengths and prefix stability") {
    for (std::size_t k : {1u, 5u, 12u}) {
        CHECK(b_sequence(k).size() == k);
        CHECK(c_sequence(k).size() == k);
    }
    const auto b12 = b_sequence(12);
    const auto b5 = b_sequence(5);
    for (std::size_t i = 0; i < 5; ++i) CHECK(b5.values[i] == b12.values[i]);
    const auto c12 = c_sequence(12);
    const auto c5 = c_sequence(5);
    for (std::size_t i = 0; i < 5; ++i) CHECK(c5.values[i] == c12.values[i]);
}

TEST_CASE("sequences agree with the period table") {
    const auto primes = next_primes(3, 15);
    const auto records = build_period_table(primes);
    const auto b = b_sequence(15);
    const auto c = c_sequence(15);
    for (std::size_t i = 0; i < records.size(); ++i) {
        CHECK(b.values[i] == records[i].b);
        CHECK(static_cast<int>(c.values[i]) == records[i].parity_bit);
    }
}

TEST_CASE("starting prime is a parameter") {
    // From 5: periods 31 (odd, plus), 57 (odd, plus), 60 (even, minus)
    CHECK(b_sequence(3, 5).values == std::vector<int>{-1, -1, +1});
    CHECK(c_sequence(3, 5).values == std::vector<std::uint8_t>{0, 0, 1});
    // p=2 can be included experimentally: period 7 is plus-type and odd
    CHECK(b_sequence(2, 2).values == std::vector<int>{-1, +1});
    CHECK(c_sequence(1, 2).values == std::vector<std::uint8_t>{0});
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS((void)b_sequence(0), std::invalid_argument);
    CHECK_THROWS_AS((void)c_sequence(0), std::invalid_argument);
    CHECK_THROWS_AS((void)b_sequence(3, 4), std::invalid_argument);
    CHECK_THROWS_AS((void)c_sequence(3, 9), std::invalid_argument);
}
