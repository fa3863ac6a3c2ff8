#include "narayana/correlation.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace narayana {

std::vector<double> CorrelationSeries::values() const {
    std::vector<double> out;
    out.reserve(sums.size());
    for (std::size_t k = 0; k < sums.size(); ++k) out.push_back(value(k));
    return out;
}

CorrelationSeries acf(const BipolarSequence& seq) {
    return ccf(seq, seq);
}

CorrelationSeries ccf(const BipolarSequence& a, const BipolarSequence& b) {
    const std::size_t n = a.values.size();
    if (n == 0) throw std::invalid_argument("ccf: empty sequence");
    if (b.values.size() != n)
        throw std::invalid_argument("ccf: length mismatch (" + std::to_string(n) + " vs " +
                                    std::to_string(b.values.size()) + ")");
    CorrelationSeries out;
    out.sums.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        long long sum = 0;
        std::size_t j2 = k;
        for (std::size_t j = 0; j < n; ++j) {
            sum += static_cast<long long>(a.values[j]) * b.values[j2];
            if (++j2 == n) j2 = 0;
        }
        out.sums[k] = sum;
    }
    return out;
}

double randomness_measure(const CorrelationSeries& series) {
    const std::size_t n = series.length();
    if (n < 2) throw std::invalid_argument("randomness_measure: need at least 2 values");
    long long off_peak = 0;
    for (std::size_t k = 1; k < n; ++k) off_peak += std::llabs(series.sums[k]);
    return 1.0 - static_cast<double>(off_peak) /
                     (static_cast<double>(n) * static_cast<double>(n - 1));
}

double ccf_peak_average(const CorrelationSeries& series) {
    const std::size_t n = series.length();
    if (n == 0) throw std::invalid_argument("ccf_peak_average: empty series");
    long long total = 0;
    for (long long s : series.sums) total += std::llabs(s);
    return static_cast<double>(total) / (static_cast<double>(n) * static_cast<double>(n));
}

double ccf_peak_max(const CorrelationSeries& series) {
    const std::size_t n = series.length();
    if (n == 0) throw std::invalid_argument("ccf_peak_max: empty series");
    long long peak = 0;
    for (long long s : series.sums) peak = std::max(peak, std::llabs(s));
    return static_cast<double>(peak) / static_cast<double>(n);
}

}  // namespace narayana
