#ifndef UHF_RATIONAL_HPP
#define UHF_RATIONAL_HPP

#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>

#include "uhf/error.hpp"

namespace uhf {

/// Exact rational on int64 with 128-bit intermediates. Always normalized:
/// den > 0, gcd(|num|, den) = 1. Overflow past int64 after reduction throws.
struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rat() = default;
    Rat(std::int64_t n) : num(n), den(1) {}
    Rat(std::int64_t n, std::int64_t d) { *this = make(n, d); }

    static Rat make(__int128 n, __int128 d) {
        if (d == 0) fail(Err::DivisionByZero, "rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        Rat r;
        r.num = narrow(n);
        r.den = narrow(d);
        return r;
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    bool is_integer() const { return den == 1; }

    friend Rat operator+(const Rat& x, const Rat& y) {
        return make((__int128)x.num * y.den + (__int128)y.num * x.den, (__int128)x.den * y.den);
    }
    friend Rat operator-(const Rat& x, const Rat& y) {
        return make((__int128)x.num * y.den - (__int128)y.num * x.den, (__int128)x.den * y.den);
    }
    friend Rat operator*(const Rat& x, const Rat& y) {
        return make((__int128)x.num * y.num, (__int128)x.den * y.den);
    }
    friend Rat operator/(const Rat& x, const Rat& y) {
        if (y.num == 0) fail(Err::DivisionByZero, "rational division by zero");
        return make((__int128)x.num * y.den, (__int128)x.den * y.num);
    }
    friend Rat operator-(const Rat& x) {
        Rat r;
        r.num = -x.num;
        r.den = x.den;
        return r;
    }

    Rat& operator+=(const Rat& y) { return *this = *this + y; }
    Rat& operator-=(const Rat& y) { return *this = *this - y; }
    Rat& operator*=(const Rat& y) { return *this = *this * y; }
    Rat& operator/=(const Rat& y) { return *this = *this / y; }

    friend bool operator==(const Rat& x, const Rat& y) { return x.num == y.num && x.den == y.den; }
    friend bool operator!=(const Rat& x, const Rat& y) { return !(x == y); }
    friend bool operator<(const Rat& x, const Rat& y) {
        return (__int128)x.num * y.den < (__int128)y.num * x.den;
    }
    friend bool operator>(const Rat& x, const Rat& y) { return y < x; }
    friend bool operator<=(const Rat& x, const Rat& y) { return !(y < x); }
    friend bool operator>=(const Rat& x, const Rat& y) { return !(x < y); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& x) { return os << x.str(); }

    /// Accepts "p", "p/q" and plain decimals such as "0.35" (kept exact).
    static Rat parse(const std::string& s);

  private:
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static std::int64_t narrow(__int128 v) {
        if (v > std::numeric_limits<std::int64_t>::max() ||
            v < std::numeric_limits<std::int64_t>::min())
            fail(Err::Overflow, "rational arithmetic overflow");
        return static_cast<std::int64_t>(v);
    }
};

inline Rat Rat::parse(const std::string& s) {
    auto bad = [&]() { fail(Err::Parse, "cannot parse rational: '" + s + "'"); };
    if (s.empty()) bad();
    std::size_t pos = 0;
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
        neg = s[pos] == '-';
        ++pos;
    }
    auto digits = [&](std::size_t& p) -> __int128 {
        if (p >= s.size() || s[p] < '0' || s[p] > '9') bad();
        __int128 v = 0;
        while (p < s.size() && s[p] >= '0' && s[p] <= '9') {
            v = v * 10 + (s[p] - '0');
            if (v > (__int128)4 * std::numeric_limits<std::int64_t>::max()) bad();
            ++p;
        }
        return v;
    };
    __int128 num = digits(pos);
    __int128 den = 1;
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        std::size_t start = pos;
        __int128 frac = digits(pos);
        for (std::size_t i = start; i < pos; ++i) den *= 10;
        num = num * den + frac;
    } else if (pos < s.size() && s[pos] == '/') {
        ++pos;
        den = digits(pos);
    }
    if (pos != s.size()) bad();
    return make(neg ? -num : num, den);
}

}  // namespace uhf

#endif
