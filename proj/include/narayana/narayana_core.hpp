#pragma once

// The Narayana sequence u(n+1) = u(n) + u(n-2) with u(0)=0, u(1)=u(2)=1:
// exact terms, residue sequences modulo m, and the classic herd-of-cows
// problem it came from (both the recurrence answer and the closed-form sum).

#include <cstddef>
#include <cstdint>
#include <vector>

#include "narayana/biguint.hpp"

namespace narayana {

/// Consecutive state (u(n-2), u(n-1), u(n)) of residues modulo `modulus`.
struct NarayanaTriple {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::uint64_t c = 0;
    std::uint64_t modulus = 2;

    NarayanaTriple() = default;
    /// Values are reduced into [0, modulus). Rejects modulus < 2.
    NarayanaTriple(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t modulus);

    /// One recurrence step: (a, b, c) -> (b, c, (a + c) mod modulus).
    NarayanaTriple step() const;

    bool is_zero() const { return a == 0 && b == 0 && c == 0; }
    bool operator==(const NarayanaTriple&) const = default;

    /// The start state (1,1,1) = (u(1), u(2), u(3)) used for period detection.
    static NarayanaTriple canonical(std::uint64_t modulus) {
        return NarayanaTriple(1, 1, 1, modulus);
    }
};

/// Exact u(n); arbitrary precision, no overflow for any n.
BigUint term_exact(std::uint64_t n);

/// `count` residues starting with the three components of `start`, each
/// following term = (previous + third-previous) mod modulus.
std::vector<std::uint64_t> sequence_mod(const NarayanaTriple& start, std::size_t count);

/// Herd size after `years` years: x(1)=2, x(2)=3, x(3)=4, x(n)=x(n-1)+x(n-3).
/// Equals term_exact(years + 3). Rejects years = 0.
BigUint herd_size_recurrence(std::uint64_t years);

/// Same value via the summation 1 + sum of binomial_term(years-3k, k) over
/// k = 0..floor((years-1)/3). Rejects years = 0.
BigUint herd_size_closed_form(std::uint64_t years);

/// n(n+1)(n+2)...(n+m) / (m+1)!  (exact; equals C(n+m, m+1)). Rejects n = 0.
BigUint binomial_term(std::uint64_t n, std::uint64_t m);

}  // namespace narayana
