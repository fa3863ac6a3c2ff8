#include "narayana/biguint.hpp"

#include <algorithm>
#include <stdexcept>

namespace narayana {

BigUint::BigUint(std::uint64_t value) {
    if (value != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(value));
        if (value >> 32) limbs_.push_back(static_cast<std::uint32_t>(value >> 32));
    }
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
    if (rhs.limbs_.size() > limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t sum = carry + limbs_[i];
        if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(sum);
        carry = sum >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

BigUint& BigUint::operator*=(std::uint32_t factor) {
    if (factor == 0) {
        limbs_.clear();
        return *this;
    }
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        std::uint64_t prod = static_cast<std::uint64_t>(limb) * factor + carry;
        limb = static_cast<std::uint32_t>(prod);
        carry = prod >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
}

std::uint32_t BigUint::div_small(std::uint32_t divisor) {
    if (divisor == 0) throw std::invalid_argument("BigUint::div_small: division by zero");
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
        rem = cur % divisor;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
}

std::strong_ordering BigUint::operator<=>(const BigUint& rhs) const {
    if (limbs_.size() != rhs.limbs_.size())
        return limbs_.size() <=> rhs.limbs_.size();
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] <=> rhs.limbs_[i];
    }
    return std::strong_ordering::equal;
}

std::uint64_t BigUint::to_u64() const {
    if (!fits_u64()) throw std::overflow_error("BigUint::to_u64: value exceeds 64 bits");
    std::uint64_t out = 0;
    if (limbs_.size() > 1) out = static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) out |= limbs_[0];
    return out;
}

std::uint64_t BigUint::mod_u64(std::uint64_t modulus) const {
    if (modulus == 0) throw std::invalid_argument("BigUint::mod_u64: zero modulus");
    unsigned __int128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        rem = ((rem << 32) | limbs_[i]) % modulus;
    }
    return static_cast<std::uint64_t>(rem);
}

std::string BigUint::to_string() const {
    if (is_zero()) return "0";
    BigUint scratch = *this;
    std::string out;
    while (!scratch.is_zero()) {
        std::uint32_t chunk = scratch.div_small(1'000'000'000u);
        std::string digits = std::to_string(chunk);
        if (!scratch.is_zero()) digits.insert(0, 9 - digits.size(), '0');
        out.insert(0, digits);
    }
    return out;
}

}  // namespace narayana
