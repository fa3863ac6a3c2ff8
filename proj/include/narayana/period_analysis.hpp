#pragma once

// Period of the Narayana sequence modulo a prime, its classification against
// the p^2+p+1 / p^2-1 dichotomy, and table construction over prime ranges.
//
// The dichotomy holds for every prime except p = 31, where the characteristic
// cubic x^3 - x^2 - 1 is ramified (its discriminant is -31): there the period
// is 930 = 31*30 and classify_period honestly reports Violation. See
// classify_period_reduced / bipolar_symbol for how table columns handle it.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace narayana {

enum class PeriodTag { plus_type, minus_type, ambiguous, violation };

/// Result of testing a period T against p^2+p+1 and p^2-1.
///   plus_type:  T | p^2+p+1 only, divisor = (p^2+p+1)/T
///   minus_type: T | p^2-1   only, divisor = (p^2-1)/T
///   ambiguous:  T divides both (possible only for T in {1,3}; never observed)
///   violation:  T divides neither
struct PeriodClass {
    PeriodTag tag = PeriodTag::violation;
    std::uint64_t divisor = 0;  // cofactor for plus/minus, 0 otherwise
    bool operator==(const PeriodClass&) const = default;
};

/// One table row for a prime.
struct PeriodRecord {
    std::uint64_t prime = 0;
    std::uint64_t period = 0;
    int parity_bit = 0;  // 1 iff the period is even
    PeriodClass period_class;
    int b = 0;  // +1 minus-type, -1 plus-type (see bipolar_symbol)
};

/// Deterministic for all 64-bit inputs (Miller-Rabin with a proven base set).
bool is_prime(std::uint64_t n);

/// All primes <= limit, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// First `count` primes >= start, ascending.
std::vector<std::uint64_t> next_primes(std::uint64_t start, std::size_t count);

/// Least T >= 1 with state(1,1,1) returning to itself after T steps mod p.
/// The step map is invertible (the companion matrix has determinant 1), so
/// plain forward iteration terminates. Rejects non-prime p.
std::uint64_t period_mod_p(std::uint64_t p);

/// Multiplicative order of the companion matrix [[0,1,0],[0,0,1],[1,0,1]]
/// mod p, by repeated multiplication until the identity recurs. Independent
/// route to the same value as period_mod_p. Rejects non-prime p.
std::uint64_t matrix_order_period(std::uint64_t p);

/// Pure divisibility test of `period` against p^2+p+1 and p^2-1.
PeriodClass classify_period(std::uint64_t p, std::uint64_t period);

/// classify_period with every factor of p stripped from the period first
/// (the order of the semisimple part of the companion matrix). Identical to
/// classify_period except at ramified primes: (31, 930) -> minus_type.
PeriodClass classify_period_reduced(std::uint64_t p, std::uint64_t period);

/// +1 for minus-type, -1 for plus-type, deciding ramified primes by the
/// reduced classification. Throws std::domain_error naming the prime if the
/// class is ambiguous or stays violating even after reduction.
int bipolar_symbol(std::uint64_t p, std::uint64_t period);

/// One PeriodRecord per prime, in input order. The list must be nonempty,
/// strictly increasing, and all prime.
std::vector<PeriodRecord> build_period_table(const std::vector<std::uint64_t>& primes);

}  // namespace narayana
