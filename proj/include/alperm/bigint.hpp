#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace alperm {

/// Unsigned arbitrary-precision integer, base 1e9 limbs, little-endian.
///
/// Counting results (Stirling, Bell, rencontres numbers) are exact by
/// contract; this keeps them exact no matter how far the recursions are
/// pushed. Only the operations the counting code needs are provided.
class BigUInt {
public:
    BigUInt() = default;
    BigUInt(std::uint64_t v) {  // NOLINT: implicit by design
        while (v != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(v % kBase));
            v /= kBase;
        }
    }

    bool is_zero() const { return limbs_.empty(); }

    BigUInt& operator+=(const BigUInt& rhs) {
        const std::size_t m = std::max(limbs_.size(), rhs.limbs_.size());
        limbs_.resize(m, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < m; ++i) {
            std::uint64_t s = carry + limbs_[i];
            if (i < rhs.limbs_.size()) s += rhs.limbs_[i];
            limbs_[i] = static_cast<std::uint32_t>(s % kBase);
            carry = s / kBase;
        }
        if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
        return *this;
    }

    friend BigUInt operator+(BigUInt a, const BigUInt& b) {
        a += b;
        return a;
    }

    /// Multiply by a small factor (must be < 1e9).
    BigUInt& operator*=(std::uint32_t m) {
        if (m >= kBase) throw std::invalid_argument("BigUInt: small factor too large");
        if (m == 0) {
            limbs_.clear();
            return *this;
        }
        std::uint64_t carry = 0;
        for (auto& limb : limbs_) {
            std::uint64_t p = static_cast<std::uint64_t>(limb) * m + carry;
            limb = static_cast<std::uint32_t>(p % kBase);
            carry = p / kBase;
        }
        while (carry != 0) {
            limbs_.push_back(static_cast<std::uint32_t>(carry % kBase));
            carry /= kBase;
        }
        return *this;
    }

    friend BigUInt operator*(BigUInt a, std::uint32_t m) {
        a *= m;
        return a;
    }

    friend BigUInt operator*(const BigUInt& a, const BigUInt& b) {
        if (a.is_zero() || b.is_zero()) return BigUInt{};
        std::vector<std::uint64_t> acc(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                std::uint64_t cur = acc[i + j] + carry +
                                    static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j];
                acc[i + j] = cur % kBase;
                carry = cur / kBase;
            }
            std::size_t pos = i + b.limbs_.size();
            while (carry != 0) {
                std::uint64_t cur = acc[pos] + carry;
                acc[pos] = cur % kBase;
                carry = cur / kBase;
                ++pos;
            }
        }
        BigUInt out;
        out.limbs_.assign(acc.begin(), acc.end());
        out.trim();
        return out;
    }

    friend bool operator==(const BigUInt& a, const BigUInt& b) { return a.limbs_ == b.limbs_; }
    friend bool operator!=(const BigUInt& a, const BigUInt& b) { return !(a == b); }
    friend bool operator<(const BigUInt& a, const BigUInt& b) {
        if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size();
        for (std::size_t i = a.limbs_.size(); i-- > 0;)
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i];
        return false;
    }

    std::string to_string() const {
        if (limbs_.empty()) return "0";
        std::string s = std::to_string(limbs_.back());
        for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
            std::string part = std::to_string(limbs_[i]);
            s += std::string(9 - part.size(), '0') + part;
        }
        return s;
    }

    double to_double() const {
        double v = 0.0;
        for (std::size_t i = limbs_.size(); i-- > 0;) v = v * static_cast<double>(kBase) + limbs_[i];
        return v;
    }

    std::uint64_t to_u64() const {
        std::uint64_t v = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            if (v > (UINT64_MAX - limbs_[i]) / kBase)
                throw std::overflow_error("BigUInt: value does not fit in 64 bits");
            v = v * kBase + limbs_[i];
        }
        return v;
    }

private:
    static constexpr std::uint64_t kBase = 1000000000;
    std::vector<std::uint32_t> limbs_;

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }
};

}  // namespace alperm
