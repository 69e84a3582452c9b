#include "uhf/field.hpp"

#include <algorithm>

namespace uhf {

namespace {

// coefficient vectors are little-endian: v[i] is the coefficient of x^i

std::vector<unsigned> poly_mod(std::vector<unsigned> a, const std::vector<unsigned>& m, unsigned p) {
    // m is monic of degree dm
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        unsigned lead = a.back();
        if (lead != 0) {
            std::size_t shift = a.size() - 1 - dm;
            for (std::size_t i = 0; i <= dm; ++i) {
                unsigned sub = (lead * m[i]) % p;
                a[shift + i] = (a[shift + i] + p * p - sub) % p;
            }
        }
        a.pop_back();
    }
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    return a;
}

std::vector<unsigned> poly_mul(const std::vector<unsigned>& a, const std::vector<unsigned>& b,
                               unsigned p) {
    std::vector<unsigned> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
}

bool is_zero_poly(const std::vector<unsigned>& a) {
    return std::all_of(a.begin(), a.end(), [](unsigned c) { return c == 0; });
}

// label <-> coefficient vector of length e, base p
std::vector<unsigned> label_to_poly(unsigned label, unsigned p, unsigned e) {
    std::vector<unsigned> v(e, 0);
    for (unsigned i = 0; i < e; ++i) {
        v[i] = label % p;
        label /= p;
    }
    return v;
}

unsigned poly_to_label(const std::vector<unsigned>& v, unsigned p, unsigned e) {
    unsigned label = 0;
    for (unsigned i = e; i-- > 0;) label = label * p + (i < v.size() ? v[i] : 0);
    return label;
}

bool divides_trial(const std::vector<unsigned>& cand, unsigned p) {
    // irreducible iff no monic divisor of degree 1..deg/2
    const std::size_t deg = cand.size() - 1;
    for (std::size_t dd = 1; dd <= deg / 2; ++dd) {
        unsigned count = 1;
        for (std::size_t i = 0; i < dd; ++i) count *= p;
        for (unsigned j = 0; j < count; ++j) {
            std::vector<unsigned> div = label_to_poly(j, p, static_cast<unsigned>(dd));
            div.push_back(1);  // monic
            if (is_zero_poly(poly_mod(cand, div, p))) return true;
        }
    }
    return false;
}

std::vector<unsigned> canonical_irreducible(unsigned p, unsigned e) {
    unsigned count = 1;
    for (unsigned i = 0; i < e; ++i) count *= p;
    for (unsigned j = 0; j < count; ++j) {
        std::vector<unsigned> cand = label_to_poly(j, p, e);
        cand.push_back(1);  // monic x^e + ...
        if (!divides_trial(cand, p)) return cand;
    }
    fail(Err::NotPrimePower, "no irreducible polynomial found");  // unreachable for prime p
}

}  // namespace

FiniteField::FiniteField(unsigned q) : q_(q) {
    if (q < 2 || q > max_order) fail(Err::BadParams, "field order must be in [2, 1024], got " + std::to_string(q));

    unsigned p = 0;
    for (unsigned d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = q;  // q prime
    unsigned e = 0;
    unsigned v = q;
    while (v % p == 0) {
        v /= p;
        ++e;
    }
    if (v != 1) fail(Err::NotPrimePower, std::to_string(q) + " is not a prime power");
    p_ = p;
    e_ = e;

    std::vector<unsigned> mod;
    if (e_ > 1) {
        mod = canonical_irreducible(p_, e_);
        mod_coeffs_.assign(mod.begin(), mod.end() - 1);
    }

    add_.resize(std::size_t(q_) * q_);
    mul_.resize(std::size_t(q_) * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);

    for (unsigned a = 0; a < q_; ++a) {
        const auto pa = label_to_poly(a, p_, e_);
        for (unsigned b = 0; b < q_; ++b) {
            const auto pb = label_to_poly(b, p_, e_);
            std::vector<unsigned> sum(e_);
            for (unsigned i = 0; i < e_; ++i) sum[i] = (pa[i] + pb[i]) % p_;
            add_[std::size_t(a) * q_ + b] = static_cast<std::uint16_t>(poly_to_label(sum, p_, e_));

            std::vector<unsigned> prod = poly_mul(pa, pb, p_);
            if (e_ > 1) prod = poly_mod(prod, mod, p_);
            mul_[std::size_t(a) * q_ + b] = static_cast<std::uint16_t>(poly_to_label(prod, p_, e_));
        }
    }
    for (unsigned a = 0; a < q_; ++a) {
        std::vector<unsigned> pa = label_to_poly(a, p_, e_);
        for (auto& c : pa) c = (p_ - c) % p_;
        neg_[a] = static_cast<std::uint16_t>(poly_to_label(pa, p_, e_));
    }
    for (unsigned a = 1; a < q_; ++a) {
        for (unsigned b = 1; b < q_; ++b) {
            if (mul_[std::size_t(a) * q_ + b] == 1) {
                inv_[a] = static_cast<std::uint16_t>(b);
                break;
            }
        }
    }
}

FieldPtr field_create(unsigned q) { return std::make_shared<const FiniteField>(q); }

bool is_prime_power(unsigned q) noexcept {
    if (q < 2) return false;
    unsigned p = 0;
    for (unsigned d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return true;  // prime
    while (q % p == 0) q /= p;
    return q == 1;
}

}  // namespace uhf
