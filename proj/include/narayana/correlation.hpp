#pragma once

// Normalized cyclic correlation over bipolar sequences:
//
//   ACF(k) = (1/N) * sum_j s(j) * s((j+k) mod N)
//   CCF(k) = (1/N) * sum_j a(j) * b((j+k) mod N)
//   R      = 1 - sum_{k=1..N-1} |ACF(k)| / (N-1)
//
// Correlation sums are accumulated as exact integers and divided by N only on
// access, so N*value(k) is always an integer of the same parity as N.

#include <cstddef>
#include <vector>

#include "narayana/binary_sequences.hpp"

namespace narayana {

/// Correlation values indexed by shift k = 0 .. N-1.
struct CorrelationSeries {
    std::vector<long long> sums;  // exact integer dot product per shift

    std::size_t length() const { return sums.size(); }
    double value(std::size_t k) const {
        return static_cast<double>(sums[k]) / static_cast<double>(sums.size());
    }
    std::vector<double> values() const;
};

/// Cyclic autocorrelation. Rejects the empty sequence.
CorrelationSeries acf(const BipolarSequence& seq);

/// Cyclic crosscorrelation. Rejects empty and unequal-length inputs.
CorrelationSeries ccf(const BipolarSequence& a, const BipolarSequence& b);

/// Randomness measure of an autocorrelation series: 1 is impulsive (fully
/// random by this measure), 0 is a constant sequence. Rejects N < 2.
double randomness_measure(const CorrelationSeries& series);

/// Mean of |value(k)| over all N shifts.
double ccf_peak_average(const CorrelationSeries& series);

/// Max of |value(k)| over all N shifts.
double ccf_peak_max(const CorrelationSeries& series);

}  // namespace narayana
