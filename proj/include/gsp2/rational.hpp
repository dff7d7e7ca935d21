#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace gsp2 {

// Exact rational arithmetic on 128-bit integers.  Every quantity produced by
// the workbench (orbital integrals, transfer factors, closed forms) is a
// rational number whose numerator and denominator stay far below 2^127 for
// the parameter ranges we enumerate; overflow aborts rather than wrapping.
struct Rational {
    __int128 num = 0;
    __int128 den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(__int128 n, __int128 d) : num(n), den(d) { reduce(); }

    static __int128 igcd(__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b) { __int128 t = a % b; a = b; b = t; }
        return a;
    }

    void reduce() {
        if (den == 0) throw std::domain_error("rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        __int128 g = igcd(num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    static __int128 checked_mul(__int128 a, __int128 b) {
        if (a == 0 || b == 0) return 0;
        __int128 r = a * b;
        if (r / b != a) throw std::overflow_error("rational: overflow");
        return r;
    }

    Rational operator+(const Rational& o) const {
        return Rational(checked_mul(num, o.den) + checked_mul(o.num, den),
                        checked_mul(den, o.den));
    }
    Rational operator-(const Rational& o) const {
        return Rational(checked_mul(num, o.den) - checked_mul(o.num, den),
                        checked_mul(den, o.den));
    }
    Rational operator*(const Rational& o) const {
        return Rational(checked_mul(num, o.num), checked_mul(den, o.den));
    }
    Rational operator/(const Rational& o) const {
        if (o.num == 0) throw std::domain_error("rational: divide by zero");
        return Rational(checked_mul(num, o.den), checked_mul(den, o.num));
    }
    Rational operator-() const { Rational r; r.num = -num; r.den = den; return r; }
    Rational& operator+=(const Rational& o) { *this = *this + o; return *this; }
    Rational& operator-=(const Rational& o) { *this = *this - o; return *this; }
    Rational& operator*=(const Rational& o) { *this = *this * o; return *this; }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool is_zero() const { return num == 0; }

    // q^k for integer k (k may be negative).
    static Rational qpow(long long q, long long k) {
        Rational r(1);
        Rational base = k >= 0 ? Rational(q) : Rational(1, q);
        long long e = k >= 0 ? k : -k;
        for (long long i = 0; i < e; ++i) r *= base;
        return r;
    }

    std::string str() const {
        auto i128s = [](__int128 v) {
            if (v == 0) return std::string("0");
            bool neg = v < 0;
            unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
            std::string s;
            while (u) { s.push_back(char('0' + int(u % 10))); u /= 10; }
            if (neg) s.push_back('-');
            std::reverse(s.begin(), s.end());
            return s;
        };
        return i128s(num) + "/" + i128s(den);
    }
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace gsp2
