#ifndef UHF_FIELD_HPP
#define UHF_FIELD_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "uhf/error.hpp"

namespace uhf {

/// Table-backed GF(q) for prime-power q in [2, 1024].
///
/// Elements are labeled 0..q-1. For q = p^e the label encodes the
/// polynomial-basis coordinates base p (label = sum c_i * p^i, c_i the
/// coefficient of x^i), so 0 is the additive and 1 the multiplicative
/// identity. Extension fields reduce modulo the canonical irreducible: the
/// monic degree-e polynomial whose non-leading coefficient vector, read as a
/// base-p integer, is smallest. Immutable after construction.
class FiniteField {
  public:
    explicit FiniteField(unsigned q);

    unsigned order() const noexcept { return q_; }
    unsigned characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return e_; }

    /// Non-leading coefficients of the reduction polynomial, constant term
    /// first (empty for prime fields).
    const std::vector<unsigned>& modulus_coeffs() const noexcept { return mod_coeffs_; }

    unsigned add(unsigned a, unsigned b) const { return add_[idx(a, b)]; }
    unsigned sub(unsigned a, unsigned b) const { return add_[idx(a, neg_[check(b)])]; }
    unsigned mul(unsigned a, unsigned b) const { return mul_[idx(a, b)]; }
    unsigned neg(unsigned a) const { return neg_[check(a)]; }

    unsigned inv(unsigned a) const {
        if (check(a) == 0) fail(Err::DivisionByZero, "inverse of 0 in GF(" + std::to_string(q_) + ")");
        return inv_[a];
    }

    unsigned div(unsigned a, unsigned b) const { return mul(a, inv(b)); }

    unsigned pow(unsigned a, std::uint64_t e) const {
        check(a);
        unsigned r = 1;
        unsigned base = a;
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    static constexpr unsigned max_order = 1024;

  private:
    unsigned check(unsigned a) const {
        if (a >= q_) fail(Err::BadParams, "element label out of range for GF(" + std::to_string(q_) + ")");
        return a;
    }
    std::size_t idx(unsigned a, unsigned b) const { return std::size_t(check(a)) * q_ + check(b); }

    unsigned q_ = 0, p_ = 0, e_ = 0;
    std::vector<unsigned> mod_coeffs_;
    std::vector<std::uint16_t> add_, mul_;
    std::vector<std::uint16_t> neg_, inv_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

/// Deterministic field context; construction throws NotPrimePower for
/// composite non-prime-power q and BadParams outside [2, 1024].
FieldPtr field_create(unsigned q);

bool is_prime_power(unsigned q) noexcept;

}  // namespace uhf

#endif
