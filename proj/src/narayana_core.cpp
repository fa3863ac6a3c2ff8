#include "narayana/narayana_core.hpp"

#include <limits>
#include <stdexcept>

namespace narayana {

NarayanaTriple::NarayanaTriple(std::uint64_t a_, std::uint64_t b_, std::uint64_t c_,
                               std::uint64_t modulus_) {
    if (modulus_ < 2) throw std::invalid_argument("NarayanaTriple: modulus must be >= 2");
    modulus = modulus_;
    a = a_ % modulus_;
    b = b_ % modulus_;
    c = c_ % modulus_;
}

NarayanaTriple NarayanaTriple::step() const {
    std::uint64_t next = a + c;  // both < modulus, so no wraparound for modulus < 2^63
    if (next >= modulus) next -= modulus;
    NarayanaTriple out;
    out.a = b;
    out.b = c;
    out.c = next;
    out.modulus = modulus;
    return out;
}

BigUint term_exact(std::uint64_t n) {
    if (n == 0) return BigUint(0);
    if (n <= 3) return BigUint(1);
    // Rolling window (u(k-3), u(k-2), u(k-1)).
    BigUint u0(1), u1(1), u2(1);  // u(1), u(2), u(3)
    for (std::uint64_t k = 4; k <= n; ++k) {
        BigUint next = u2 + u0;
        u0 = std::move(u1);
        u1 = std::move(u2);
        u2 = std::move(next);
    }
    return u2;
}

std::vector<std::uint64_t> sequence_mod(const NarayanaTriple& start, std::size_t count) {
    std::vector<std::uint64_t> out;
    out.reserve(count);
    const std::uint64_t head[3] = {start.a, start.b, start.c};
    for (std::size_t i = 0; i < count && i < 3; ++i) out.push_back(head[i]);
    NarayanaTriple state = start;
    while (out.size() < count) {
        state = state.step();
        out.push_back(state.c);
    }
    return out;
}

BigUint herd_size_recurrence(std::uint64_t years) {
    if (years == 0) throw std::invalid_argument("herd_size_recurrence: years must be >= 1");
    BigUint x1(2), x2(3), x3(4);  // x(1), x(2), x(3)
    if (years == 1) return x1;
    if (years == 2) return x2;
    if (years == 3) return x3;
    for (std::uint64_t n = 4; n <= years; ++n) {
        BigUint next = x3 + x1;
        x1 = std::move(x2);
        x2 = std::move(x3);
        x3 = std::move(next);
    }
    return x3;
}

BigUint binomial_term(std::uint64_t n, std::uint64_t m) {
    if (n == 0) throw std::invalid_argument("binomial_term: n must be >= 1");
    if (n + m > std::numeric_limits<std::uint32_t>::max())
        throw std::overflow_error("binomial_term: factor exceeds machine word");
    // result after step i is C(n+i, i+1), an integer, so each division is exact.
    BigUint result(1);
    for (std::uint64_t i = 0; i <= m; ++i) {
        result *= static_cast<std::uint32_t>(n + i);
        result.div_small(static_cast<std::uint32_t>(i + 1));
    }
    return result;
}

BigUint herd_size_closed_form(std::uint64_t years) {
    if (years == 0) throw std::invalid_argument("herd_size_closed_form: years must be >= 1");
    BigUint total(1);
    for (std::uint64_t k = 0; 3 * k <= years - 1; ++k) {
        total += binomial_term(years - 3 * k, k);
    }
    return total;
}

}  // namespace narayana
