#ifndef PADICFT_RATIONAL_HPP
#define PADICFT_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "padicft/errors.hpp"

namespace padicft {

// Exact rational arithmetic on int64 numerator/denominator, normalized so the
// denominator is positive and gcd(|num|, den) = 1.  Intermediate products run
// through __int128 and overflow raises instead of wrapping: slope and
// conductor bookkeeping must never be silently wrong.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {} // NOLINT: implicit by design
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw InputError("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    static std::int64_t checked(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN)
            throw std::overflow_error("rational overflow");
        return static_cast<std::int64_t>(v);
    }

    static Rational make(__int128 n, __int128 d) {
        if (d == 0) throw InputError("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n, b = d;
        while (b) { __int128 t = a % b; a = b; b = t; } // gcd on __int128
        if (a > 1) { n /= a; d /= a; }
        Rational r;
        r.num = checked(n);
        r.den = checked(d);
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make((__int128)a.num * b.den + (__int128)b.num * a.den,
                    (__int128)a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make((__int128)a.num * b.den - (__int128)b.num * a.den,
                    (__int128)a.den * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make((__int128)a.num * b.num, (__int128)a.den * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0) throw InputError("rational division by zero");
        return make((__int128)a.num * b.den, (__int128)a.den * b.num);
    }
    Rational operator-() const { Rational r; r.num = -num; r.den = den; return r; }
    Rational& operator+=(const Rational& b) { *this = *this + b; return *this; }
    Rational& operator-=(const Rational& b) { *this = *this - b; return *this; }
    Rational& operator*=(const Rational& b) { *this = *this * b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.num * b.den < (__int128)b.num * a.den;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    bool is_integer() const { return den == 1; }

    // floor(num/den) as an integer (exact, sign-correct)
    std::int64_t floor() const {
        std::int64_t q = num / den, r = num % den;
        return (r < 0) ? q - 1 : q;
    }
    std::int64_t ceil() const { return -((-*this).floor()); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    // parses "a" or "a/b"
    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(std::stoll(s));
            return Rational(std::stoll(s.substr(0, slash)),
                            std::stoll(s.substr(slash + 1)));
        } catch (const std::logic_error&) {
            throw InputError("bad rational literal: " + s);
        }
    }
};

// q^e for rational results with integer e (e may be negative)
inline Rational rational_pow(std::int64_t base, std::int64_t e) {
    if (base == 0) throw InputError("pow with zero base");
    bool inv = e < 0;
    if (inv) e = -e;
    Rational r(1);
    Rational b(base);
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return inv ? Rational(1) / r : r;
}

} // namespace padicft

#endif
