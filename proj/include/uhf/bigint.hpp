#ifndef UHF_BIGINT_HPP
#define UHF_BIGINT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace uhf {

/// Unsigned big integer, base 2^32 limbs, little-endian. Just enough for
/// exact alphabet-power code sizes (q^e with q <= 1024 and large e).
class BigUint {
  public:
    BigUint() : limbs_{0} {}
    BigUint(std::uint64_t v) {
        limbs_.push_back(static_cast<std::uint32_t>(v));
        limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
        trim();
    }

    static BigUint pow(std::uint64_t base, unsigned exp) {
        BigUint r(1);
        for (unsigned i = 0; i < exp; ++i) r.mul_u64(base);
        return r;
    }

    void mul_u64(std::uint64_t f) {
        std::uint32_t lo = static_cast<std::uint32_t>(f);
        std::uint32_t hi = static_cast<std::uint32_t>(f >> 32);
        if (hi == 0) {
            mul_u32(lo);
            return;
        }
        BigUint high_part = *this;
        high_part.mul_u32(hi);
        high_part.limbs_.insert(high_part.limbs_.begin(), 0);  // * 2^32
        mul_u32(lo);
        add(high_part);
    }

    void add(const BigUint& other) {
        if (other.limbs_.size() > limbs_.size()) limbs_.resize(other.limbs_.size(), 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            std::uint64_t cur = carry + limbs_[i];
            if (i < other.limbs_.size()) cur += other.limbs_[i];
            limbs_[i] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
        trim();
    }

    bool fits_u64() const { return limbs_.size() <= 2; }

    std::uint64_t as_u64() const {
        std::uint64_t v = limbs_[0];
        if (limbs_.size() > 1) v |= static_cast<std::uint64_t>(limbs_[1]) << 32;
        return v;
    }

    friend bool operator==(const BigUint& a, const BigUint& b) { return a.limbs_ == b.limbs_; }
    friend std::strong_ordering operator<=>(const BigUint& a, const BigUint& b) {
        if (a.limbs_.size() != b.limbs_.size())
            return a.limbs_.size() <=> b.limbs_.size();
        for (std::size_t i = a.limbs_.size(); i-- > 0;)
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
        return std::strong_ordering::equal;
    }

    std::string str() const {
        std::vector<std::uint32_t> work = limbs_;
        std::string out;
        while (work.size() > 1 || work[0] != 0) {
            std::uint64_t rem = 0;
            for (std::size_t i = work.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | work[i];
                work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (work.size() > 1 && work.back() == 0) work.pop_back();
            std::string chunk = std::to_string(rem);
            if (work.size() == 1 && work[0] == 0) {
                out.insert(0, chunk);
            } else {
                out.insert(0, std::string(9 - chunk.size(), '0') + chunk);
            }
        }
        return out.empty() ? "0" : out;
    }

  private:
    void mul_u32(std::uint32_t f) {
        if (f == 0) {
            limbs_.assign(1, 0);
            return;
        }
        std::uint64_t carry = 0;
        for (auto& limb : limbs_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * f + carry;
            limb = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
        trim();
    }

    void trim() {
        while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
    }

    std::vector<std::uint32_t> limbs_;
};

}  // namespace uhf

#endif
