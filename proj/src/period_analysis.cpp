#include "narayana/period_analysis.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "narayana/narayana_core.hpp"

namespace narayana {

namespace {

std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(x) * y % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Bases proving Miller-Rabin deterministic for all n < 3.3e24 (covers 64 bits).
constexpr std::array<std::uint64_t, 12> kWitnesses = {2,  3,  5,  7,  11, 13,
                                                      17, 19, 23, 29, 31, 37};

using Mat3 = std::array<std::array<std::uint64_t, 3>, 3>;

Mat3 mat_mul(const Mat3& lhs, const Mat3& rhs, std::uint64_t p) {
    Mat3 out{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            unsigned __int128 sum = 0;
            for (int k = 0; k < 3; ++k)
                sum += static_cast<unsigned __int128>(lhs[i][k]) * rhs[k][j];
            out[i][j] = static_cast<std::uint64_t>(sum % p);
        }
    }
    return out;
}

constexpr Mat3 kCompanion = {{{0, 1, 0}, {0, 0, 1}, {1, 0, 1}}};

Mat3 identity_mod(std::uint64_t p) {
    Mat3 out{};
    for (int i = 0; i < 3; ++i) out[i][i] = 1 % p;
    return out;
}

void require_prime(std::uint64_t p, const char* who) {
    if (!is_prime(p))
        throw std::invalid_argument(std::string(who) + ": " + std::to_string(p) +
                                    " is not prime");
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t w : kWitnesses) {
        if (n % w == 0) return n == w;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t w : kWitnesses) {
        std::uint64_t x = pow_mod(w, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 2) return out;
    std::vector<bool> sieve(limit + 1, true);
    sieve[0] = sieve[1] = false;
    for (std::uint64_t i = 2; i * i <= limit; ++i) {
        if (!sieve[i]) continue;
        for (std::uint64_t j = i * i; j <= limit; j += i) sieve[j] = false;
    }
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (sieve[i]) out.push_back(i);
    return out;
}

std::vector<std::uint64_t> next_primes(std::uint64_t start, std::size_t count) {
    std::vector<std::uint64_t> out;
    out.reserve(count);
    std::uint64_t n = start < 2 ? 2 : start;
    while (out.size() < count) {
        if (is_prime(n)) out.push_back(n);
        ++n;
    }
    return out;
}

std::uint64_t period_mod_p(std::uint64_t p) {
    require_prime(p, "period_mod_p");
    const NarayanaTriple start = NarayanaTriple::canonical(p);
    NarayanaTriple state = start.step();
    std::uint64_t steps = 1;
    while (!(state == start)) {
        state = state.step();
        ++steps;
    }
    return steps;
}

std::uint64_t matrix_order_period(std::uint64_t p) {
    require_prime(p, "matrix_order_period");
    const Mat3 identity = identity_mod(p);
    Mat3 m = kCompanion;
    for (auto& row : m)
        for (auto& entry : row) entry %= p;
    Mat3 power = m;
    std::uint64_t order = 1;
    while (!(power == identity)) {
        power = mat_mul(power, m, p);
        ++order;
    }
    return order;
}

PeriodClass classify_period(std::uint64_t p, std::uint64_t period) {
    if (period == 0) throw std::invalid_argument("classify_period: period must be >= 1");
    const std::uint64_t plus = p * p + p + 1;
    const std::uint64_t minus = p * p - 1;
    const bool divides_plus = plus % period == 0;
    const bool divides_minus = minus % period == 0;
    if (divides_plus && divides_minus) return {PeriodTag::ambiguous, 0};
    if (divides_plus) return {PeriodTag::plus_type, plus / period};
    if (divides_minus) return {PeriodTag::minus_type, minus / period};
    return {PeriodTag::violation, 0};
}

PeriodClass classify_period_reduced(std::uint64_t p, std::uint64_t period) {
    std::uint64_t reduced = period;
    while (reduced % p == 0) reduced /= p;
    if (reduced == 0) reduced = 1;
    return classify_period(p, reduced);
}

int bipolar_symbol(std::uint64_t p, std::uint64_t period) {
    PeriodClass cls = classify_period(p, period);
    if (cls.tag == PeriodTag::violation) cls = classify_period_reduced(p, period);
    switch (cls.tag) {
        case PeriodTag::minus_type:
            return +1;
        case PeriodTag::plus_type:
            return -1;
        default:
            throw std::domain_error("bipolar_symbol: prime " + std::to_string(p) +
                                    " has unclassifiable period " + std::to_string(period));
    }
}

std::vector<PeriodRecord> build_period_table(const std::vector<std::uint64_t>& primes) {
    if (primes.empty())
        throw std::invalid_argument("build_period_table: prime list is empty");
    std::vector<PeriodRecord> out;
    out.reserve(primes.size());
    std::uint64_t previous = 0;
    for (std::uint64_t p : primes) {
        if (p <= previous)
            throw std::invalid_argument("build_period_table: primes must be strictly increasing");
        previous = p;
        require_prime(p, "build_period_table");
        PeriodRecord record;
        record.prime = p;
        record.period = period_mod_p(p);
        record.parity_bit = record.period % 2 == 0 ? 1 : 0;
        record.period_class = classify_period(p, record.period);
        record.b = bipolar_symbol(p, record.period);
        out.push_back(record);
    }
    return out;
}

}  // namespace narayana
